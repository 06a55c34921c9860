#ifndef ENDOCHAIN_VERIFIER_HPP
#define ENDOCHAIN_VERIFIER_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endochain/selfmap.hpp"

namespace endochain {

/// The closed catalog of claim ids checked by the verification engine.
inline constexpr std::array<std::string_view, 29> claim_ids = {
    "3.1", "3.2", "3.3", "3.4", "3.5",
    "4.1a", "4.1b", "4.2", "4.3", "4.4", "4.5",
    "5.1", "5.2", "5.3", "5.4", "5.5", "5.6",
    "6.1", "6.2", "6.3", "6.4",
    "7.1", "7.2", "7.3", "7.4", "7.5", "7.6", "7.7", "7.8",
};

bool is_known_claim(std::string_view id);
std::string_view claim_description(std::string_view id);

enum class verify_status { pass, fail, info };

const char* to_string(verify_status s) noexcept;

/// Structured counterexample: a short summary plus named fields rendered
/// verbatim into reports.
struct witness {
  std::string summary;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct verification_result {
  std::string claim;
  std::string params;
  verify_status status = verify_status::pass;
  std::optional<witness> counterexample;  // always present when status == fail
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

struct claim_params {
  int n = 0;
  std::optional<int> a;  // narrows type-2 sweeps when both are given
  std::optional<int> b;
};

/// Runs the registered exhaustive check for one claim. Universal claims
/// sweep every legal parameter combination at the given n; golden claims
/// reproduce their pinned instance exactly and downgrade to info at other
/// sizes. Oracle sides use brute-force element arithmetic only.
verification_result verify_claim(std::string_view id, const claim_params& p);

/// Every claim, every n in [n_lo, n_hi], in claim-id order. Failures are
/// data, not exceptions.
std::vector<verification_result> run_suite(int n_lo, int n_hi);
std::vector<verification_result> run_suite(int n_lo, int n_hi,
                                           std::span<const std::string_view> ids);

/// Aggregate gate: true when no result failed (info results are fine).
bool all_passed(std::span<const verification_result> results);

/// Resolves the two specs over the chain of size n and scans for the
/// first additivity or Leibniz violation in canonical pair order.
///
/// map specs:     "D" | "delta:<k>" | "delta:<k>,<seg>"
/// carrier specs: "str:<a>,<b>" | "str:<a1>,...,<am>" | "full" | "DS:<a>,<b>"
///                | "CO" | "S"
std::optional<pair_witness> search_counterexample(std::string_view map_spec,
                                                  std::string_view carrier_spec,
                                                  int n);

}  // namespace endochain

#endif
