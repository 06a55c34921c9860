#include <random>

#include "doctest.h"
#include "endochain/chain.hpp"

using namespace endochain;

namespace {

endo e4(std::initializer_list<int> img) { return endo::make(chain(4), img); }

endo random_monotone(std::mt19937& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> dist(0, n - 1);
  for (int& v : img) v = dist(rng);
  std::sort(img.begin(), img.end());
  return endo::make(chain(n), img);
}

bool images_nondecreasing(const endo& f) {
  for (int i = 0; i + 1 < f.size(); ++i)
    if (f(i) > f(i + 1)) return false;
  return true;
}

}  // namespace

TEST_SUITE("chain") {

TEST_CASE("construction validates images") {
  CHECK(e4({2, 2, 3, 3}).str() == "<2,2,3,3>");
  CHECK(e4({0, 1, 2, 3}) == endo::identity(chain(4)));
  CHECK_THROWS_AS(e4({1, 0, 0, 0}), error);
  CHECK_THROWS_AS(e4({0, 1, 2, 4}), error);
  CHECK_THROWS_AS(endo::make(chain(4), {0, 1, 2}), error);
  CHECK_THROWS_AS(chain(0), error);
  try {
    e4({1, 0, 0, 0});
  } catch (const error& err) {
    CHECK(err.code() == errc::not_monotone);
  }
}

TEST_CASE("constants") {
  CHECK(endo::constant(chain(4), 1).str() == "<1,1,1,1>");
  CHECK(endo::constant(chain(1), 0).str() == "<0>");
  CHECK_THROWS_AS(endo::constant(chain(4), 4), error);
  CHECK(endo::constant(chain(4), 2).is_constant());
  CHECK_FALSE(e4({0, 0, 1, 1}).is_constant());
}

TEST_CASE("add is the pointwise join") {
  CHECK(add(e4({0, 0, 1, 1}), e4({2, 2, 3, 3})) == e4({2, 2, 3, 3}));
  CHECK(add(e4({0, 1, 1, 3}), e4({0, 0, 2, 2})) == e4({0, 1, 2, 3}));
  const endo f = e4({0, 1, 1, 2});
  CHECK(add(f, f) == f);
  CHECK_THROWS_AS(add(f, endo::constant(chain(3), 0)), error);
}

TEST_CASE("composition applies the left factor first") {
  // regression pin: flipping the orientation changes this product
  CHECK(compose(e4({0, 0, 1, 1}), e4({2, 2, 3, 3})) == e4({2, 2, 2, 2}));
  CHECK(compose(e4({2, 2, 3, 3}), e4({0, 0, 1, 1})) == e4({1, 1, 1, 1}));
  const endo f = e4({0, 0, 2, 3});
  CHECK(compose(f, endo::identity(chain(4))) == f);
  CHECK(compose(endo::identity(chain(4)), f) == f);
  CHECK(compose(e4({1, 2, 2, 2}), e4({1, 1, 1, 1})) == e4({1, 1, 1, 1}));
  CHECK((e4({0, 0, 1, 1}) * e4({2, 2, 3, 3})) == e4({2, 2, 2, 2}));
  CHECK((e4({0, 1, 1, 3}) + e4({0, 0, 2, 2})) == e4({0, 1, 2, 3}));
}

TEST_CASE("leq is the pointwise order") {
  CHECK(leq(e4({0, 0, 1, 1}), e4({2, 2, 3, 3})));
  CHECK(leq(e4({0, 1, 1, 3}), e4({0, 1, 1, 3})));
  CHECK_FALSE(leq(e4({0, 1, 1, 3}), e4({0, 0, 2, 2})));
  CHECK_FALSE(leq(e4({0, 0, 2, 2}), e4({0, 1, 1, 3})));
}

TEST_CASE("leq agrees with absorption under add") {
  std::mt19937 rng(7u);
  for (int n = 1; n <= 12; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const endo f = random_monotone(rng, n);
      const endo g = random_monotone(rng, n);
      CHECK(leq(f, g) == (add(f, g) == g));
    }
}

TEST_CASE("add and compose stay monotone") {
  std::mt19937 rng(11u);
  for (int n = 2; n <= 12; ++n)
    for (int trial = 0; trial < 50; ++trial) {
      const endo f = random_monotone(rng, n);
      const endo g = random_monotone(rng, n);
      CHECK(images_nondecreasing(add(f, g)));
      CHECK(images_nondecreasing(compose(f, g)));
    }
}

TEST_CASE("randomized add laws at larger sizes") {
  std::mt19937 rng(13u);
  for (int n = 7; n <= 12; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const endo f = random_monotone(rng, n);
      const endo g = random_monotone(rng, n);
      const endo h = random_monotone(rng, n);
      CHECK(add(f, g) == add(g, f));
      CHECK(add(add(f, g), h) == add(f, add(g, h)));
      CHECK(add(f, f) == f);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(f, add(g, h)) == add(compose(f, g), compose(f, h)));
      CHECK(compose(add(g, h), f) == add(compose(g, f), compose(h, f)));
    }
}

TEST_CASE("enumeration is lexicographic, duplicate-free and correctly counted") {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<endo> all = all_endomorphisms(chain(n));
    CHECK(all.size() == count_endomorphisms(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const endo& f : all) CHECK(images_nondecreasing(f));
  }
  CHECK(count_endomorphisms(1) == 1);
  CHECK(count_endomorphisms(2) == 3);
  CHECK(count_endomorphisms(3) == 10);
  CHECK(count_endomorphisms(4) == 35);
  CHECK(count_endomorphisms(8) == 6435);
}

}  // TEST_SUITE
