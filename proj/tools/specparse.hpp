#ifndef ENDOCHAIN_TOOLS_SPECPARSE_HPP
#define ENDOCHAIN_TOOLS_SPECPARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "endochain/selfmap.hpp"
#include "endochain/strings.hpp"

namespace endochain::cli {

/// A parsed --string argument: two anchors give a type-2 string, three or
/// more give a type-m string. Both views share the same element carrier.
struct string_context {
  std::optional<string_type2> two;
  std::optional<string_type_m> multi;

  const carrier& elements() const { return two ? two->elements() : multi->elements(); }
  const chain& base_chain() const { return elements().base_chain(); }
  std::vector<int> anchors() const;

  /// Canonical label of the element at a sorted-carrier position.
  std::string label_at(int pos) const;
  std::string label_of(const endo& x) const;
};

string_context parse_string_spec(int n, std::string_view spec);

/// "2..6" or "4" -> [lo, hi].
std::pair<int, int> parse_n_range(std::string_view text);

/// "I:<j>" (lower ideal), "{0,n}" (boundary constants), "CO" (constants).
carrier parse_ideal_spec(const string_context& ctx, std::string_view spec);

/// "D" (shift map on the differential subfamily), "delta:<k>",
/// "delta:<k>,<seg>". Returns the map together with the carrier it closes
/// over (the differential subfamily for D, the whole string otherwise).
struct closure_setup {
  self_map map;
  carrier over;
};

closure_setup parse_derivation_spec(const string_context& ctx, std::string_view spec);

std::vector<int> parse_csv_ints(std::string_view text, errc code);

}  // namespace endochain::cli

#endif
