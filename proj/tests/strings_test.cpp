#include "doctest.h"
#include "endochain/strings.hpp"

using namespace endochain;

TEST_SUITE("strings2") {

TEST_CASE("a string lists its elements in index order") {
  const string_type2 str(chain(4), 2, 3);
  REQUIRE(str.elements().size() == 5);
  CHECK(str.at(0) == endo::make(chain(4), {2, 2, 2, 2}));
  CHECK(str.at(1) == endo::make(chain(4), {2, 2, 2, 3}));
  CHECK(str.at(2) == endo::make(chain(4), {2, 2, 3, 3}));
  CHECK(str.at(3) == endo::make(chain(4), {2, 3, 3, 3}));
  CHECK(str.at(4) == endo::make(chain(4), {3, 3, 3, 3}));
  CHECK(str.index_of(str.at(3)) == 3);
  CHECK(str.label(2) == "a_2");
  for (int k = 0; k + 1 <= 4; ++k) CHECK(leq(str.at(k), str.at(k + 1)));
}

TEST_CASE("anchor validation") {
  CHECK(string_type2(chain(2), 0, 1).elements().size() == 3);
  CHECK_THROWS_AS(string_type2(chain(4), 3, 2), error);
  CHECK_THROWS_AS(string_type2(chain(4), 2, 2), error);
  CHECK_THROWS_AS(string_type2(chain(4), 0, 4), error);
  CHECK_THROWS_AS(string_type2(chain(4), 2, 3).at(5), error);
  CHECK_THROWS_AS(string_type2(chain(4), 2, 3).index_of(endo::constant(chain(4), 0)),
                  error);
}

TEST_CASE("band formula instances") {
  const string_type2 str(chain(4), 2, 3);
  CHECK(mul_index_type2(2, 0, str) == 0);  // s <= n-b-1
  CHECK(mul_index_type2(2, 1, str) == 2);  // n-b <= s <= n-a-1
  CHECK(mul_index_type2(1, 3, str) == 4);  // s >= n-a
  CHECK_THROWS_AS(mul_index_type2(5, 0, str), error);
}

TEST_CASE("band formula equals composition for every pair up to n = 6") {
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = a + 1; b <= n - 1; ++b) {
        const string_type2 str(chain(n), a, b);
        for (int k = 0; k <= n; ++k)
          for (int s = 0; s <= n; ++s)
            CHECK(mul_index_type2(k, s, str) ==
                  str.index_of(compose(str.at(k), str.at(s))));
      }
}

TEST_CASE("classification matches squaring") {
  const string_type2 str(chain(4), 2, 3);
  CHECK(classify(0, str) == square_class::a_nilpotent);
  CHECK(classify(1, str) == square_class::idempotent);
  CHECK(classify(2, str) == square_class::b_nilpotent);
  CHECK(classify(3, str) == square_class::b_nilpotent);
  CHECK(classify(4, str) == square_class::b_nilpotent);
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = a + 1; b <= n - 1; ++b) {
        const string_type2 s(chain(n), a, b);
        CHECK(classify(0, s) != square_class::b_nilpotent);
        for (int k = 0; k <= n; ++k) {
          const endo square = compose(s.at(k), s.at(k));
          switch (classify(k, s)) {
            case square_class::a_nilpotent: CHECK(square == s.at(0)); break;
            case square_class::idempotent: CHECK(square == s.at(k)); break;
            case square_class::b_nilpotent: CHECK(square == s.at(n)); break;
          }
        }
      }
}

TEST_CASE("only the top is a top-nilpotent in a bottom-anchored string") {
  for (int n = 2; n <= 8; ++n) {
    const string_type2 str(chain(n), 0, n - 1);
    const carrier nb = make_subfamily(str, subfamily_kind::b_nilpotents).elements;
    CHECK(nb.size() == 1);
    CHECK(nb[0] == str.at(n));
  }
}

TEST_CASE("subfamily index ranges") {
  const string_type2 str(chain(4), 2, 3);
  const carrier ds = make_subfamily(str, subfamily_kind::differential).elements;
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == str.at(0));
  CHECK(ds[1] == str.at(1));

  const carrier lower = make_subfamily(str, subfamily_kind::lower_union).elements;
  CHECK(lower == make_subfamily(str, subfamily_kind::a_nilpotents)
                     .elements.merged_with(
                         make_subfamily(str, subfamily_kind::idempotents).elements));

  const carrier i0 = make_subfamily(str, subfamily_kind::differential_ideal, 0).elements;
  CHECK(i0.size() == 1);
  CHECK(i0[0] == str.at(0));
  CHECK_THROWS_AS(make_subfamily(str, subfamily_kind::differential_ideal, 1), error);

  const carrier consts = make_subfamily(str, subfamily_kind::constants).elements;
  CHECK(consts.size() == 2);
  CHECK(consts[0] == str.at(0));
  CHECK(consts[1] == str.at(4));
}

}  // TEST_SUITE
