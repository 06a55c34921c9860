#include "endochain/axioms.hpp"

#include <utility>

namespace endochain {

namespace {

// Pairwise result cache: the value of op(x, y) for every pair, plus its
// carrier index or -1 when the value escapes the carrier.
struct pair_table {
  std::vector<endo> values;  // size * size, row-major
  std::vector<int> index;
  int size = 0;
  bool closed = true;

  const endo& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)];
  }
  int idx(int i, int j) const {
    return index[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) + static_cast<std::size_t>(j)];
  }
};

template <typename Op>
pair_table tabulate(const carrier& s, Op op) {
  pair_table t;
  t.size = s.size();
  t.values.reserve(static_cast<std::size_t>(t.size) * static_cast<std::size_t>(t.size));
  t.index.reserve(t.values.capacity());
  for (int i = 0; i < t.size; ++i)
    for (int j = 0; j < t.size; ++j) {
      endo v = op(s[i], s[j]);
      auto ix = s.index_of(v);
      t.index.push_back(ix.value_or(-1));
      if (!ix) t.closed = false;
      t.values.push_back(std::move(v));
    }
  return t;
}

law_check closure_check(const carrier& s, const pair_table& t) {
  law_check out;
  for (int i = 0; i < t.size && out.holds; ++i)
    for (int j = 0; j < t.size; ++j)
      if (t.idx(i, j) < 0) {
        out.holds = false;
        out.witness = law_witness{{i, j}, t.at(i, j)};
        break;
      }
  (void)s;
  return out;
}

law_check commutative_check(const pair_table& t) {
  law_check out;
  for (int i = 0; i < t.size && out.holds; ++i)
    for (int j = 0; j < t.size; ++j)
      if (!(t.at(i, j) == t.at(j, i))) {
        out.holds = false;
        out.witness = law_witness{{i, j}, std::nullopt};
        break;
      }
  return out;
}

law_check idempotent_check(const carrier& s, const pair_table& add_t) {
  law_check out;
  for (int i = 0; i < add_t.size; ++i)
    if (!(add_t.at(i, i) == s[i])) {
      out.holds = false;
      out.witness = law_witness{{i}, add_t.at(i, i)};
      break;
    }
  return out;
}

// Associativity of one operation: (x op y) op z == x op (y op z). Uses
// index lookups when the table is closed, direct recomputation otherwise.
template <typename Op>
law_check associative_check(const carrier& s, const pair_table& t, Op op) {
  law_check out;
  const int m = t.size;
  for (int i = 0; i < m && out.holds; ++i)
    for (int j = 0; j < m && out.holds; ++j)
      for (int k = 0; k < m; ++k) {
        bool equal;
        if (t.closed) {
          equal = t.idx(t.idx(i, j), k) == t.idx(i, t.idx(j, k));
        } else {
          equal = op(t.at(i, j), s[k]) == op(s[i], t.at(j, k));
        }
        if (!equal) {
          out.holds = false;
          out.witness = law_witness{{i, j, k}, std::nullopt};
          break;
        }
      }
  return out;
}

// x*(y+z) == x*y + x*z (left == true) or (y+z)*x == y*x + z*x.
law_check distributive_check(const carrier& s, const pair_table& add_t,
                             const pair_table& mul_t, bool left) {
  law_check out;
  const int m = add_t.size;
  const bool fast = add_t.closed && mul_t.closed;
  for (int x = 0; x < m && out.holds; ++x)
    for (int y = 0; y < m && out.holds; ++y)
      for (int z = 0; z < m; ++z) {
        bool equal;
        if (fast) {
          equal = left ? mul_t.idx(x, add_t.idx(y, z)) ==
                             add_t.idx(mul_t.idx(x, y), mul_t.idx(x, z))
                       : mul_t.idx(add_t.idx(y, z), x) ==
                             add_t.idx(mul_t.idx(y, x), mul_t.idx(z, x));
        } else {
          equal = left ? compose(s[x], add_t.at(y, z)) ==
                             add(mul_t.at(x, y), mul_t.at(x, z))
                       : compose(add_t.at(y, z), s[x]) ==
                             add(mul_t.at(y, x), mul_t.at(z, x));
        }
        if (!equal) {
          out.holds = false;
          out.witness = law_witness{{x, y, z}, std::nullopt};
          break;
        }
      }
  return out;
}

}  // namespace

axiom_report check_semiring_axioms(const carrier& s) {
  require(!s.empty(), errc::bad_params, "axiom check needs a nonempty carrier");
  const pair_table add_t = tabulate(s, [](const endo& f, const endo& g) { return add(f, g); });
  const pair_table mul_t = tabulate(s, [](const endo& f, const endo& g) { return compose(f, g); });

  axiom_report r;
  r.closed_under_add = closure_check(s, add_t);
  r.closed_under_compose = closure_check(s, mul_t);
  r.add_commutative = commutative_check(add_t);
  r.add_idempotent = idempotent_check(s, add_t);
  r.add_associative = associative_check(s, add_t, [](const endo& f, const endo& g) { return add(f, g); });
  r.compose_associative = associative_check(s, mul_t, [](const endo& f, const endo& g) { return compose(f, g); });
  r.left_distributive = distributive_check(s, add_t, mul_t, true);
  r.right_distributive = distributive_check(s, add_t, mul_t, false);
  return r;
}

ideal_check is_ideal(const carrier& sub, const carrier& ambient) {
  require(sub.subset_of(ambient), errc::not_a_subset,
          "ideal candidate is not a subset of the ambient carrier");
  ideal_check out;
  for (int i = 0; i < sub.size(); ++i)
    for (int j = 0; j < sub.size(); ++j) {
      endo v = add(sub[i], sub[j]);
      if (!sub.contains(v)) {
        out.holds = false;
        out.witness = law_witness{{i, j}, std::move(v)};
        out.failed_law = "add";
        return out;
      }
    }
  for (int i = 0; i < sub.size(); ++i)
    for (int j = 0; j < ambient.size(); ++j) {
      endo right = compose(sub[i], ambient[j]);
      if (!sub.contains(right)) {
        out.holds = false;
        out.witness = law_witness{{i, j}, std::move(right)};
        out.failed_law = "right_absorb";
        return out;
      }
      endo left = compose(ambient[j], sub[i]);
      if (!sub.contains(left)) {
        out.holds = false;
        out.witness = law_witness{{i, j}, std::move(left)};
        out.failed_law = "left_absorb";
        return out;
      }
    }
  return out;
}

}  // namespace endochain
