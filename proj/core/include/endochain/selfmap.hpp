#ifndef ENDOCHAIN_SELFMAP_HPP
#define ENDOCHAIN_SELFMAP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endochain/carrier.hpp"
#include "endochain/strings.hpp"

namespace endochain {

/// A total map from a carrier into an ambient carrier containing it,
/// stored as a table. Immutable after construction.
class self_map {
 public:
  self_map(std::string label, carrier domain, carrier ambient,
           std::vector<int> table);

  /// Tabulates fn over the domain; throws escapes_ambient when a value
  /// is not an ambient element.
  static self_map tabulate(std::string label, const carrier& domain,
                           const carrier& ambient,
                           const std::function<endo(const endo&)>& fn);

  const std::string& label() const noexcept { return label_; }
  const carrier& domain() const noexcept { return domain_; }
  const carrier& ambient() const noexcept { return ambient_; }

  /// Image of x, which must be a domain element.
  const endo& operator()(const endo& x) const;

  /// Image of the domain element at the given domain position.
  const endo& value_at(int domain_pos) const {
    return ambient_[table_[static_cast<std::size_t>(domain_pos)]];
  }
  int ambient_index_at(int domain_pos) const {
    return table_[static_cast<std::size_t>(domain_pos)];
  }

  /// Same map on a smaller domain; the ambient carrier is unchanged.
  self_map restricted_to(const carrier& sub, std::string label = {}) const;

  /// Extensional equality: same domain and same value table.
  bool same_action_as(const self_map& other) const {
    return domain_ == other.domain_ && ambient_ == other.ambient_ &&
           table_ == other.table_;
  }

  /// True when every value is again a domain element.
  bool domain_invariant() const;

 private:
  std::string label_;
  carrier domain_;
  carrier ambient_;
  std::vector<int> table_;  // domain position -> ambient position
};

/// The shift map on a type-2 string: index k goes to k-1, the bottom is
/// fixed. Defined on the whole string; restrict to the differential
/// subfamily for derivation claims.
self_map shift_derivation(const string_type2& str);

/// The symmetrized product map x -> alpha*x + x*alpha on the carrier.
self_map delta(const endo& alpha, const carrier& domain, const carrier& ambient,
               std::string label = {});
self_map delta(const endo& alpha, const carrier& c, std::string label = {});

/// delta of the k-th string element over the whole string.
self_map delta(const string_type2& str, int alpha_index);
self_map delta(const string_type_m& str, index_m alpha_index);

/// Counterexample record: map(x*y) != map(x)*y + x*map(y), or the
/// additive analogue.
struct pair_witness {
  endo x, y;
  endo lhs, rhs;
};

struct law_result {
  bool holds = true;
  std::optional<pair_witness> witness;
};

/// m(x+y) == m(x)+m(y) over all ordered domain pairs; first failure wins.
law_result is_additive(const self_map& m);

/// m(x*y) == m(x)*y + x*m(y) over all ordered domain pairs.
law_result satisfies_leibniz(const self_map& m);

/// Additive and Leibniz; the returned witness names the law that failed
/// via which_failed ("additive" or "leibniz").
struct derivation_result {
  bool holds = true;
  std::string which_failed;
  std::optional<pair_witness> witness;
};

derivation_result is_derivation(const self_map& m);

struct commute_result {
  bool holds = true;
  std::optional<endo> at;   // first point where the composites differ
  std::optional<endo> m1_first, m2_first;
};

/// m1(m2(x)) == m2(m1(x)) for all domain x. Both maps must share domain
/// and ambient and leave the domain invariant.
commute_result maps_commute(const self_map& m1, const self_map& m2);

/// Sequential composition: first's value feeds then, so the result sends
/// x to then(first(x)). Requires the domain invariant under first.
self_map compose_maps(const self_map& first, const self_map& then);

/// t-fold Leibniz: d^t(x*y) equals the join over k of d^(t-k)(x)*d^k(y)
/// (additive idempotency collapses the binomial coefficients).
law_result iterated_leibniz_check(const self_map& d, int order);

/// delta restricted to the constants of a type-m string, together with
/// the closed-form prediction per constant and the Leibniz identity over
/// constant pairs.
struct constants_delta_report {
  std::vector<std::pair<endo, endo>> images;  // (constant, delta value)
  law_result formula;   // computed value vs three-case prediction
  law_result leibniz;   // restricted Leibniz over constant pairs
};

constants_delta_report delta_on_constants(const endo& alpha_sr,
                                          const string_type_m& str);

}  // namespace endochain

#endif
