#include "endochain/chain.hpp"

#include <algorithm>

namespace endochain {

endo endo::make(const chain& c, std::span<const int> images) {
  const int n = c.size();
  require(static_cast<int>(images.size()) == n, errc::length_mismatch,
          "expected " + std::to_string(n) + " images, got " +
              std::to_string(images.size()));
  std::vector<std::uint8_t> img;
  img.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    require(0 <= v && v < n, errc::out_of_range,
            "image " + std::to_string(v) + " at position " + std::to_string(i) +
                " outside 0.." + std::to_string(n - 1));
    if (i > 0)
      require(images[i - 1] <= v, errc::not_monotone,
              "images decrease at position " + std::to_string(i - 1));
    img.push_back(static_cast<std::uint8_t>(v));
  }
  return endo(std::move(img));
}

endo endo::make(const chain& c, std::initializer_list<int> images) {
  return make(c, std::span<const int>(images.begin(), images.size()));
}

endo endo::constant(const chain& c, int value) {
  require(0 <= value && value < c.size(), errc::out_of_range,
          "constant value " + std::to_string(value) + " outside 0.." +
              std::to_string(c.size() - 1));
  return endo(std::vector<std::uint8_t>(static_cast<std::size_t>(c.size()),
                                        static_cast<std::uint8_t>(value)));
}

endo endo::identity(const chain& c) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(c.size()));
  for (int i = 0; i < c.size(); ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return endo(std::move(img));
}

bool endo::is_constant() const noexcept {
  return std::all_of(img_.begin(), img_.end(),
                     [&](std::uint8_t v) { return v == img_.front(); });
}

std::string endo::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(img_[i]));
  }
  out += '>';
  return out;
}

namespace {
void check_same_chain(const endo& f, const endo& g) {
  require(f.size() == g.size(), errc::chain_mismatch,
          "operands live on chains of size " + std::to_string(f.size()) +
              " and " + std::to_string(g.size()));
}
}  // namespace

endo add(const endo& f, const endo& g) {
  check_same_chain(f, g);
  std::vector<int> img(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i)
    img[static_cast<std::size_t>(i)] = std::max(f(i), g(i));
  return endo::make(f.domain(), img);
}

endo compose(const endo& f, const endo& g) {
  check_same_chain(f, g);
  std::vector<int> img(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) img[static_cast<std::size_t>(i)] = g(f(i));
  return endo::make(f.domain(), img);
}

bool leq(const endo& f, const endo& g) {
  check_same_chain(f, g);
  for (int i = 0; i < f.size(); ++i)
    if (f(i) > g(i)) return false;
  return true;
}

std::vector<endo> all_endomorphisms(const chain& c) {
  const int n = c.size();
  std::vector<endo> out;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(endo::make(c, tuple));
    // next non-decreasing tuple in lexicographic order
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) break;
    const int v = tuple[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < n; ++i) tuple[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

std::uint64_t count_endomorphisms(int n) {
  require(n >= 1, errc::out_of_range, "chain needs at least one element");
  // binomial(2n-1, n-1); ascending factors keep every partial product an
  // integer (the partial after step i is binomial(n+i, i))
  unsigned __int128 result = 1;
  for (int i = 1; i <= n - 1; ++i) {
    result = result * static_cast<unsigned>(n + i);
    result /= static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace endochain
