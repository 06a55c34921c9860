#ifndef ENDOCHAIN_STRINGS_HPP
#define ENDOCHAIN_STRINGS_HPP

#include <string>
#include <vector>

#include "endochain/carrier.hpp"

namespace endochain {

/// The (n+1)-element chain of endomorphisms with image inside {a, b},
/// a < b. Element k sends the first n-k points to a and the last k to b;
/// index 0 is the constant a, index n the constant b.
class string_type2 {
 public:
  string_type2(const chain& c, int a, int b);

  const chain& base_chain() const noexcept { return chain_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  /// Largest element index, equal to the chain size n.
  int top_index() const noexcept { return chain_.size(); }

  const carrier& elements() const noexcept { return elems_; }
  const endo& at(int k) const;
  int index_of(const endo& x) const;

  std::string label(int k) const { return "a_" + std::to_string(k); }

 private:
  chain chain_;
  int a_, b_;
  carrier elems_;
};

/// Closed-form product index: at(k) * at(s) == at(mul_index_type2(k, s, str)).
/// Three bands in s: below n-b the product collapses to the bottom, between
/// n-b and n-a-1 both image points are fixed and k passes through, from n-a
/// the product saturates at the top.
int mul_index_type2(int k, int s, const string_type2& str);

enum class square_class { a_nilpotent, idempotent, b_nilpotent };

const char* to_string(square_class c) noexcept;

/// Squaring behaviour of element k: square equal to bottom, itself, or top.
square_class classify(int k, const string_type2& str);

enum class subfamily_kind {
  a_nilpotents,       // indices 0 .. n-b-1
  b_nilpotents,       // indices n-a .. n
  idempotents,        // indices n-b .. n-a-1
  lower_union,        // indices 0 .. n-a-1 (a-nilpotents + idempotents)
  upper_union,        // indices n-b .. n   (idempotents + b-nilpotents)
  differential,       // indices 0 .. n-b   (domain of the shift derivation)
  differential_ideal, // indices 0 .. j, j <= n-b-1
  constants,          // the two constants, indices {0, n}
};

const char* to_string(subfamily_kind k) noexcept;

struct subfamily {
  subfamily_kind kind;
  int param = 0;  // the j of differential_ideal; unused otherwise
  carrier elements;
};

subfamily make_subfamily(const string_type2& str, subfamily_kind kind, int j = 0);

/// Double index (k, seg) of a type-m string element: k in 0..n counts
/// points mapped to the segment's upper anchor, seg in 1..m-1 names the
/// segment. Canonical form uses (n, seg) instead of (0, seg+1) for shared
/// boundary elements; only the global bottom keeps k = 0.
struct index_m {
  int k = 0;
  int seg = 1;

  friend bool operator==(const index_m&, const index_m&) = default;
};

/// Union of the consecutive type-2 strings over the anchors
/// a_1 < ... < a_m, a ((m-1)n + 1)-element chain.
class string_type_m {
 public:
  string_type_m(const chain& c, std::vector<int> anchors);

  /// Anchors 0, 1, ..., n-1: the largest string, covering every constant.
  static string_type_m full(const chain& c);

  const chain& base_chain() const noexcept { return chain_; }
  const std::vector<int>& anchors() const noexcept { return anchors_; }
  int anchor_count() const noexcept { return static_cast<int>(anchors_.size()); }
  int segment_count() const noexcept { return anchor_count() - 1; }
  bool is_full() const noexcept;

  const carrier& elements() const noexcept { return elems_; }

  /// Validates ranges and resolves the boundary alias.
  index_m canonical(index_m ix) const;
  const endo& at(index_m ix) const;
  index_m index_of(const endo& x) const;

  /// Position of a canonical index in the sorted carrier: (seg-1)*n + k.
  int position(index_m ix) const;
  index_m at_position(int pos) const;

  std::string label(index_m ix) const;

 private:
  chain chain_;
  std::vector<int> anchors_;
  carrier elems_;
};

/// Closed-form product index for type-m strings; bands on the second
/// factor's k relative to the first factor's segment anchors. Result is
/// canonical.
index_m mul_index_type_m(index_m x, index_m y, const string_type_m& str);

/// The m constant endomorphisms of the string, one per anchor.
subfamily constants_ideal(const string_type_m& str);

}  // namespace endochain

#endif
