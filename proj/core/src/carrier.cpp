#include "endochain/carrier.hpp"

#include <algorithm>

namespace endochain {

carrier::carrier(const chain& c, std::vector<endo> elements)
    : chain_(c), elems_(std::move(elements)) {
  for (const endo& e : elems_)
    require(e.size() == chain_.size(), errc::chain_mismatch,
            "element " + e.str() + " does not live on a chain of size " +
                std::to_string(chain_.size()));
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

carrier carrier::full(const chain& c) { return carrier(c, all_endomorphisms(c)); }

std::optional<int> carrier::index_of(const endo& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || !(*it == x)) return std::nullopt;
  return static_cast<int>(it - elems_.begin());
}

bool carrier::subset_of(const carrier& other) const {
  if (chain_ != other.chain_) return false;
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

carrier carrier::merged_with(const carrier& other) const {
  require(chain_ == other.chain_, errc::chain_mismatch,
          "cannot merge carriers over different chains");
  std::vector<endo> joined = elems_;
  joined.insert(joined.end(), other.elems_.begin(), other.elems_.end());
  return carrier(chain_, std::move(joined));
}

}  // namespace endochain
