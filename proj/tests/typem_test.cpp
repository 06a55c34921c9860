#include <random>

#include "doctest.h"
#include "endochain/axioms.hpp"
#include "endochain/strings.hpp"

using namespace endochain;

TEST_SUITE("stringsm") {

TEST_CASE("construction, size and degeneration") {
  const string_type_m full(chain(4), {0, 1, 2, 3});
  CHECK(full.elements().size() == 13);
  CHECK(full.is_full());

  const string_type_m pair(chain(4), {2, 3});
  CHECK(pair.elements() == string_type2(chain(4), 2, 3).elements());
  CHECK_FALSE(pair.is_full());

  CHECK_THROWS_AS(string_type_m(chain(4), {1, 1, 2}), error);
  CHECK_THROWS_AS(string_type_m(chain(4), {2}), error);
  CHECK_THROWS_AS(string_type_m(chain(4), {0, 4}), error);
  CHECK(string_type_m::full(chain(4)).anchors() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("canonical indices resolve the boundary alias") {
  const string_type_m full(chain(4), {0, 1, 2, 3});
  CHECK(full.canonical(index_m{0, 2}) == index_m{4, 1});
  CHECK(full.canonical(index_m{0, 1}) == index_m{0, 1});
  CHECK(full.canonical(index_m{3, 2}) == index_m{3, 2});
  CHECK(full.at(index_m{0, 2}) == full.at(index_m{4, 1}));
  CHECK_THROWS_AS(full.canonical(index_m{5, 1}), error);
  CHECK_THROWS_AS(full.canonical(index_m{1, 4}), error);
  CHECK(full.label(index_m{0, 3}) == "a_4_2");
}

TEST_CASE("positions round-trip through double indices") {
  const string_type_m str(chain(5), {0, 2, 3});
  for (int pos = 0; pos < str.elements().size(); ++pos) {
    const index_m ix = str.at_position(pos);
    CHECK(str.position(ix) == pos);
    CHECK(str.at(ix) == str.elements()[pos]);
  }
  CHECK(str.at(index_m{0, 1}) == endo::constant(chain(5), 0));
  CHECK(str.at(index_m{5, 2}) == endo::constant(chain(5), 3));
}

TEST_CASE("pinned double-index product") {
  const string_type_m full(chain(4), {0, 1, 2, 3});
  const index_m x{2, 1};  // <0,0,1,1>
  const index_m y{2, 3};  // <2,2,3,3>
  CHECK(full.at(x) == endo::make(chain(4), {0, 0, 1, 1}));
  CHECK(full.at(y) == endo::make(chain(4), {2, 2, 3, 3}));
  const index_m product = mul_index_type_m(x, y, full);
  CHECK(product == index_m{4, 2});
  CHECK(full.at(product) == endo::make(chain(4), {2, 2, 2, 2}));
  // the top of the string absorbs from the right
  CHECK(mul_index_type_m(index_m{2, 2}, index_m{4, 3}, full) == index_m{4, 3});
}

TEST_CASE("double-index formula equals composition, exhaustively to n = 5") {
  for (int n = 2; n <= 5; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> anchors;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) anchors.push_back(v);
      const string_type_m str(chain(n), anchors);
      for (int p = 0; p < str.elements().size(); ++p)
        for (int q = 0; q < str.elements().size(); ++q) {
          const index_m x = str.at_position(p);
          const index_m y = str.at_position(q);
          CHECK(mul_index_type_m(x, y, str) ==
                str.index_of(compose(str.at(x), str.at(y))));
        }
    }
}

TEST_CASE("double-index formula equals composition, randomized to n = 8") {
  std::mt19937 rng(101u);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<int> anchors;
    for (int v = 0; v < n; ++v)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) anchors.push_back(v);
    if (anchors.size() < 2) continue;
    const string_type_m str(chain(n), anchors);
    std::uniform_int_distribution<int> pick(0, str.elements().size() - 1);
    for (int pair = 0; pair < 30; ++pair) {
      const index_m x = str.at_position(pick(rng));
      const index_m y = str.at_position(pick(rng));
      CHECK(mul_index_type_m(x, y, str) ==
            str.index_of(compose(str.at(x), str.at(y))));
    }
  }
}

TEST_CASE("constants form an ideal") {
  const string_type_m full(chain(4), {0, 1, 2, 3});
  const subfamily co = constants_ideal(full);
  REQUIRE(co.elements.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(co.elements[i] == endo::constant(chain(4), i));
  CHECK(is_ideal(co.elements, full.elements()).holds);

  const string_type_m pair(chain(5), {1, 3});
  const subfamily pair_co = constants_ideal(pair);
  CHECK(pair_co.elements.size() == 2);
  CHECK(is_ideal(pair_co.elements, pair.elements()).holds);
}

TEST_CASE("strings of every anchor set are subsemirings up to n = 6") {
  for (int n = 2; n <= 6; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> anchors;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) anchors.push_back(v);
      const string_type_m str(chain(n), anchors);
      const int m = str.anchor_count();
      CHECK(str.elements().size() == (m - 1) * n + 1);
      const axiom_report r = check_semiring_axioms(str.elements());
      CHECK(r.all_hold());
    }
}

TEST_CASE("contiguous anchor runs give substrings; skipping an anchor does not") {
  const string_type_m whole(chain(3), {0, 1, 2});
  CHECK(string_type_m(chain(3), {0, 1}).elements().subset_of(whole.elements()));
  CHECK(string_type_m(chain(3), {1, 2}).elements().subset_of(whole.elements()));
  const string_type_m skipping(chain(3), {0, 2});
  CHECK_FALSE(skipping.elements().subset_of(whole.elements()));
  CHECK_FALSE(whole.elements().contains(endo::make(chain(3), {0, 0, 2})));
  CHECK(skipping.elements().contains(endo::make(chain(3), {0, 0, 2})));
}

}  // TEST_SUITE
