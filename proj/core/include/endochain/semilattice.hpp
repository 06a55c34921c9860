#ifndef ENDOCHAIN_SEMILATTICE_HPP
#define ENDOCHAIN_SEMILATTICE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "endochain/selfmap.hpp"

namespace endochain {

/// Structure report for a set of self-maps under sequential composition.
/// Maps are deduplicated extensionally first; the table is indexed by the
/// surviving representatives in first-occurrence order.
struct semilattice_report {
  std::vector<self_map> representatives;
  /// Labels of the inputs collapsed onto each representative.
  std::vector<std::vector<std::string>> collapsed;
  /// table[i][j] = representative index of rep_i followed by rep_j,
  /// or -1 when the composite is not in the set.
  std::vector<std::vector<int>> table;
  bool closed = true;
  bool commutative = true;
  bool idempotent = true;
  std::optional<int> identity;
  std::optional<int> absorbing;

  int distinct_maps() const { return static_cast<int>(representatives.size()); }
};

semilattice_report analyze_derivation_set(std::span<const self_map> maps);

/// Convenience: the full family delta(at(0)) .. delta(at(n)) on a type-2
/// string, analyzed as above.
semilattice_report analyze_string_derivations(const string_type2& str);

}  // namespace endochain

#endif
