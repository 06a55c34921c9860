#ifndef ENDOCHAIN_TOOLS_RENDER_HPP
#define ENDOCHAIN_TOOLS_RENDER_HPP

#include <string>
#include <vector>

#include "endochain/closure.hpp"
#include "endochain/semilattice.hpp"
#include "endochain/verifier.hpp"
#include "specparse.hpp"

namespace endochain::cli {

enum class output_format { ascii, csv, json, dot };

output_format parse_format(std::string_view text);
const char* to_string(output_format f) noexcept;

/// A rendered operation table: cells reference element positions, so the
/// ascii, csv and json emitters agree cell for cell by construction.
struct op_table {
  std::string op;  // "add" | "mul"
  std::vector<std::string> labels;
  std::vector<endo> elements;
  std::vector<std::vector<int>> cells;
};

op_table make_op_table(const string_context& ctx, const std::string& op);

std::string render_table(const string_context& ctx, const op_table& table,
                         output_format format);

std::string render_derivations(const string_context& ctx,
                               const semilattice_report& report,
                               output_format format);

std::string render_closure(const string_context& ctx, const carrier& over,
                           const carrier& ideal, const std::string& derivation_label,
                           const closure_trace& trace, output_format format);

std::string render_verify(const std::vector<verification_result>& results, int n_lo,
                          int n_hi, output_format format);

}  // namespace endochain::cli

#endif
