#ifndef ENDOCHAIN_CLAIMS_IMPL_HPP
#define ENDOCHAIN_CLAIMS_IMPL_HPP

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "endochain/verifier.hpp"

namespace endochain::detail {

/// Thrown to unwind a claim after its first recorded failure; the scan
/// order is fixed, so the recorded witness is canonical.
struct claim_abort {};

class claim_run {
 public:
  explicit claim_run(const claim_params& p) : p_(p) {
    require(p.n >= 2, errc::bad_params, "claims need a chain of size >= 2");
    if (p.a || p.b) {
      require(p.a && p.b, errc::bad_params, "narrowing needs both a and b");
      require(0 <= *p.a && *p.a < *p.b && *p.b <= p.n - 1, errc::bad_params,
              "narrowing needs 0 <= a < b <= n-1");
    }
  }

  int n() const { return p_.n; }

  template <typename Fn>
  void check(bool ok, Fn&& make_witness_fn) {
    if (ok) return;
    failure = make_witness_fn();
    throw claim_abort{};
  }

  void note(std::string text) { notes.push_back(std::move(text)); }

  /// Marks the whole result informational (nothing asserted at this n).
  void set_info() { info = true; }

  template <typename Fn>
  void each_ab(Fn fn) const {
    if (p_.a) {
      fn(*p_.a, *p_.b);
      return;
    }
    for (int a = 0; a <= p_.n - 2; ++a)
      for (int b = a + 1; b <= p_.n - 1; ++b) fn(a, b);
  }

  /// Strictly increasing anchor subsets of {0..n-1} with >= 2 elements,
  /// enumerated by ascending bitmask for determinism.
  template <typename Fn>
  void each_anchor_set(Fn fn) const {
    const int n = p_.n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> anchors;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) anchors.push_back(v);
      fn(anchors);
    }
  }

  std::optional<witness> failure;
  /// For claims whose content is a counterexample: the reproduced witness,
  /// attached to a passing result.
  std::optional<witness> reproduced;
  std::vector<std::string> notes;
  bool info = false;

 private:
  claim_params p_;
};

witness make_witness(std::string summary,
                     std::initializer_list<std::pair<std::string, std::string>> fields);

using claim_checker = void (*)(claim_run&);

struct claim_entry {
  std::string_view id;
  std::string_view description;
  claim_checker run;
};

std::span<const claim_entry> claim_registry();

}  // namespace endochain::detail

#endif
