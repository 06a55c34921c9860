#ifndef ENDOCHAIN_CHAIN_HPP
#define ENDOCHAIN_CHAIN_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "endochain/error.hpp"

namespace endochain {

/// The finite chain {0 < 1 < ... < n-1} viewed as a join semilattice.
class chain {
 public:
  explicit chain(int n) : n_(n) {
    require(n >= 1, errc::out_of_range, "chain needs at least one element");
  }

  int size() const noexcept { return n_; }

  friend bool operator==(const chain&, const chain&) = default;

 private:
  int n_;
};

/// An order-preserving self-map of a chain, stored as its image tuple.
///
/// Products are taken in diagrammatic order: the left factor acts first,
/// so (f * g)(i) == g(f(i)). Every index formula and derivation table in
/// this library depends on that orientation; see the regression tests.
class endo {
 public:
  static endo make(const chain& c, std::span<const int> images);
  static endo make(const chain& c, std::initializer_list<int> images);
  static endo constant(const chain& c, int value);
  static endo identity(const chain& c);

  chain domain() const noexcept { return chain(static_cast<int>(img_.size())); }
  int size() const noexcept { return static_cast<int>(img_.size()); }

  /// Image of the point i.
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

  std::span<const std::uint8_t> images() const noexcept { return img_; }

  bool is_constant() const noexcept;

  /// Renders as "<2,2,3,3>".
  std::string str() const;

  friend bool operator==(const endo&, const endo&) = default;

  /// Lexicographic order on image tuples; same-size tuples only make
  /// sense to compare, but the ordering is total regardless.
  friend std::strong_ordering operator<=>(const endo& f, const endo& g) {
    return f.img_ <=> g.img_;
  }

 private:
  explicit endo(std::vector<std::uint8_t> img) : img_(std::move(img)) {}

  std::vector<std::uint8_t> img_;
};

/// Pointwise join.
endo add(const endo& f, const endo& g);

/// Diagrammatic composition: result(i) = g(f(i)).
endo compose(const endo& f, const endo& g);

/// f <= g pointwise; equivalent to add(f, g) == g.
bool leq(const endo& f, const endo& g);

inline endo operator+(const endo& f, const endo& g) { return add(f, g); }
inline endo operator*(const endo& f, const endo& g) { return compose(f, g); }

/// All order-preserving self-maps of the chain, in lexicographic order.
std::vector<endo> all_endomorphisms(const chain& c);

/// binomial(2n-1, n): the number of monotone self-maps of an n-chain.
std::uint64_t count_endomorphisms(int n);

}  // namespace endochain

#endif
