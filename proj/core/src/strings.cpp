#include "endochain/strings.hpp"

#include <algorithm>
#include <numeric>

namespace endochain {

namespace {

std::vector<int> two_anchor_tuple(int n, int a, int b, int k) {
  // first n-k points to a, last k to b
  std::vector<int> img(static_cast<std::size_t>(n), a);
  for (int i = n - k; i < n; ++i) img[static_cast<std::size_t>(i)] = b;
  return img;
}

}  // namespace

string_type2::string_type2(const chain& c, int a, int b)
    : chain_(c), a_(a), b_(b), elems_(c, {}) {
  const int n = c.size();
  require(0 <= a && a < b && b <= n - 1, errc::bad_anchors,
          "need 0 <= a < b <= n-1, got a=" + std::to_string(a) +
              " b=" + std::to_string(b) + " n=" + std::to_string(n));
  std::vector<endo> elems;
  elems.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    elems.push_back(endo::make(c, two_anchor_tuple(n, a, b, k)));
  elems_ = carrier(c, std::move(elems));
  // sorted carrier order coincides with index order
}

const endo& string_type2::at(int k) const {
  require(0 <= k && k <= top_index(), errc::index_out_of_range,
          "string index " + std::to_string(k) + " outside 0.." +
              std::to_string(top_index()));
  return elems_[k];
}

int string_type2::index_of(const endo& x) const {
  auto ix = elems_.index_of(x);
  require(ix.has_value(), errc::not_in_string,
          x.str() + " is not an element of this string");
  return *ix;
}

int mul_index_type2(int k, int s, const string_type2& str) {
  const int n = str.top_index();
  require(0 <= k && k <= n && 0 <= s && s <= n, errc::index_out_of_range,
          "indices must lie in 0.." + std::to_string(n));
  if (s <= n - str.b() - 1) return 0;
  if (s <= n - str.a() - 1) return k;
  return n;
}

const char* to_string(square_class c) noexcept {
  switch (c) {
    case square_class::a_nilpotent: return "a_nilpotent";
    case square_class::idempotent: return "idempotent";
    case square_class::b_nilpotent: return "b_nilpotent";
  }
  return "?";
}

square_class classify(int k, const string_type2& str) {
  const int n = str.top_index();
  require(0 <= k && k <= n, errc::index_out_of_range,
          "string index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  if (k <= n - str.b() - 1) return square_class::a_nilpotent;
  if (k <= n - str.a() - 1) return square_class::idempotent;
  return square_class::b_nilpotent;
}

const char* to_string(subfamily_kind k) noexcept {
  switch (k) {
    case subfamily_kind::a_nilpotents: return "a_nilpotents";
    case subfamily_kind::b_nilpotents: return "b_nilpotents";
    case subfamily_kind::idempotents: return "idempotents";
    case subfamily_kind::lower_union: return "lower_union";
    case subfamily_kind::upper_union: return "upper_union";
    case subfamily_kind::differential: return "differential";
    case subfamily_kind::differential_ideal: return "differential_ideal";
    case subfamily_kind::constants: return "constants";
  }
  return "?";
}

subfamily make_subfamily(const string_type2& str, subfamily_kind kind, int j) {
  const int n = str.top_index();
  const int a = str.a();
  const int b = str.b();
  int lo = 0, hi = -1;
  switch (kind) {
    case subfamily_kind::a_nilpotents: lo = 0; hi = n - b - 1; break;
    case subfamily_kind::b_nilpotents: lo = n - a; hi = n; break;
    case subfamily_kind::idempotents: lo = n - b; hi = n - a - 1; break;
    case subfamily_kind::lower_union: lo = 0; hi = n - a - 1; break;
    case subfamily_kind::upper_union: lo = n - b; hi = n; break;
    case subfamily_kind::differential: lo = 0; hi = n - b; break;
    case subfamily_kind::differential_ideal:
      require(0 <= j && j <= n - b - 1, errc::index_out_of_range,
              "differential ideal index " + std::to_string(j) +
                  " outside 0.." + std::to_string(n - b - 1));
      lo = 0;
      hi = j;
      break;
    case subfamily_kind::constants: {
      carrier pair(str.base_chain(), {str.at(0), str.at(n)});
      return subfamily{kind, 0, std::move(pair)};
    }
  }
  std::vector<endo> elems;
  for (int k = std::max(lo, 0); k <= std::min(hi, n); ++k) elems.push_back(str.at(k));
  return subfamily{kind, kind == subfamily_kind::differential_ideal ? j : 0,
                   carrier(str.base_chain(), std::move(elems))};
}

string_type_m::string_type_m(const chain& c, std::vector<int> anchors)
    : chain_(c), anchors_(std::move(anchors)), elems_(c, {}) {
  const int n = c.size();
  require(anchors_.size() >= 2, errc::bad_anchors, "need at least two anchors");
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    require(0 <= anchors_[i] && anchors_[i] <= n - 1, errc::bad_anchors,
            "anchor " + std::to_string(anchors_[i]) + " outside 0.." +
                std::to_string(n - 1));
    if (i > 0)
      require(anchors_[i - 1] < anchors_[i], errc::bad_anchors,
              "anchors must be strictly increasing");
  }
  std::vector<endo> elems;
  for (int seg = 1; seg <= segment_count(); ++seg) {
    const int lo = anchors_[static_cast<std::size_t>(seg - 1)];
    const int hi = anchors_[static_cast<std::size_t>(seg)];
    for (int k = (seg == 1 ? 0 : 1); k <= n; ++k)
      elems.push_back(endo::make(c, two_anchor_tuple(n, lo, hi, k)));
  }
  elems_ = carrier(c, std::move(elems));
}

string_type_m string_type_m::full(const chain& c) {
  require(c.size() >= 2, errc::bad_anchors,
          "the full string needs a chain with at least two elements");
  std::vector<int> anchors(static_cast<std::size_t>(c.size()));
  std::iota(anchors.begin(), anchors.end(), 0);
  return string_type_m(c, std::move(anchors));
}

bool string_type_m::is_full() const noexcept {
  return anchor_count() == chain_.size();
}

index_m string_type_m::canonical(index_m ix) const {
  const int n = chain_.size();
  require(1 <= ix.seg && ix.seg <= segment_count(), errc::index_out_of_range,
          "segment " + std::to_string(ix.seg) + " outside 1.." +
              std::to_string(segment_count()));
  require(0 <= ix.k && ix.k <= n, errc::index_out_of_range,
          "index " + std::to_string(ix.k) + " outside 0.." + std::to_string(n));
  if (ix.k == 0 && ix.seg > 1) return index_m{n, ix.seg - 1};
  return ix;
}

int string_type_m::position(index_m ix) const {
  ix = canonical(ix);
  return (ix.seg - 1) * chain_.size() + ix.k;
}

index_m string_type_m::at_position(int pos) const {
  const int n = chain_.size();
  require(0 <= pos && pos < elems_.size(), errc::index_out_of_range,
          "position " + std::to_string(pos) + " outside the string");
  if (pos <= n) return index_m{pos, 1};
  const int seg = (pos - 1) / n + 1;
  return index_m{pos - (seg - 1) * n, seg};
}

const endo& string_type_m::at(index_m ix) const { return elems_[position(ix)]; }

index_m string_type_m::index_of(const endo& x) const {
  auto pos = elems_.index_of(x);
  require(pos.has_value(), errc::not_in_string,
          x.str() + " is not an element of this string");
  return at_position(*pos);
}

std::string string_type_m::label(index_m ix) const {
  ix = canonical(ix);
  return "a_" + std::to_string(ix.k) + "_" + std::to_string(ix.seg);
}

index_m mul_index_type_m(index_m x, index_m y, const string_type_m& str) {
  x = str.canonical(x);
  y = str.canonical(y);
  const int n = str.base_chain().size();
  const auto& anchors = str.anchors();
  const int seg_lo = anchors[static_cast<std::size_t>(x.seg - 1)];
  const int seg_hi = anchors[static_cast<std::size_t>(x.seg)];
  int k;
  if (y.k <= n - seg_hi - 1)
    k = 0;
  else if (y.k <= n - seg_lo - 1)
    k = x.k;
  else
    k = n;
  return str.canonical(index_m{k, y.seg});
}

subfamily constants_ideal(const string_type_m& str) {
  std::vector<endo> consts;
  consts.reserve(str.anchors().size());
  for (int a : str.anchors()) consts.push_back(endo::constant(str.base_chain(), a));
  return subfamily{subfamily_kind::constants, 0,
                   carrier(str.base_chain(), std::move(consts))};
}

}  // namespace endochain
