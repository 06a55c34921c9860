#ifndef ENDOCHAIN_CARRIER_HPP
#define ENDOCHAIN_CARRIER_HPP

#include <optional>
#include <vector>

#include "endochain/chain.hpp"

namespace endochain {

/// A finite set of endomorphisms over one chain, kept sorted by image
/// tuple (lexicographically) and free of duplicates, so that iteration,
/// witness search and reports are reproducible.
class carrier {
 public:
  carrier(const chain& c, std::vector<endo> elements);

  /// The full endomorphism carrier: every monotone self-map of c.
  static carrier full(const chain& c);

  const chain& base_chain() const noexcept { return chain_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool empty() const noexcept { return elems_.empty(); }

  const endo& operator[](int i) const { return elems_[static_cast<std::size_t>(i)]; }

  std::vector<endo>::const_iterator begin() const noexcept { return elems_.begin(); }
  std::vector<endo>::const_iterator end() const noexcept { return elems_.end(); }

  std::optional<int> index_of(const endo& x) const;
  bool contains(const endo& x) const { return index_of(x).has_value(); }
  bool subset_of(const carrier& other) const;

  /// Set union, preserving the sorted-unique invariant.
  carrier merged_with(const carrier& other) const;

  friend bool operator==(const carrier&, const carrier&) = default;

 private:
  chain chain_;
  std::vector<endo> elems_;
};

}  // namespace endochain

#endif
