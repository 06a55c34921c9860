#ifndef ENDOCHAIN_AXIOMS_HPP
#define ENDOCHAIN_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "endochain/carrier.hpp"

namespace endochain {

/// Witness for a failed law: the offending element indices in carrier
/// order, plus the escaped value for closure failures.
struct law_witness {
  std::vector<int> indices;
  std::optional<endo> value;
};

struct law_check {
  bool holds = true;
  std::optional<law_witness> witness;
};

/// One boolean per semiring law, each verified by exhaustive enumeration
/// over the carrier. Witnesses are the first failing tuple in scan order
/// (outer index first), so two runs agree byte for byte. No law assumes
/// a zero element.
struct axiom_report {
  law_check closed_under_add;
  law_check closed_under_compose;
  law_check add_commutative;
  law_check add_associative;
  law_check add_idempotent;
  law_check compose_associative;
  law_check left_distributive;
  law_check right_distributive;

  bool all_hold() const {
    return closed_under_add.holds && closed_under_compose.holds &&
           add_commutative.holds && add_associative.holds &&
           add_idempotent.holds && compose_associative.holds &&
           left_distributive.holds && right_distributive.holds;
  }
};

axiom_report check_semiring_axioms(const carrier& s);

struct ideal_check {
  bool holds = true;
  /// On failure: indices {i in sub, j in ambient}, the escaping product
  /// or sum, and which side failed.
  std::optional<law_witness> witness;
  std::string failed_law;  // "add", "left_absorb", "right_absorb"
};

/// Two-sided ideal test: sub closed under add, and x*y, y*x land in sub
/// for every x in sub, y in ambient.
ideal_check is_ideal(const carrier& sub, const carrier& ambient);

}  // namespace endochain

#endif
