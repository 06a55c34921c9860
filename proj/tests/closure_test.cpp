#include "doctest.h"
#include "endochain/closure.hpp"

using namespace endochain;

TEST_SUITE("closure") {

TEST_CASE("lower ideals close to the whole differential subfamily") {
  const string_type2 str(chain(5), 1, 3);
  const carrier ds = make_subfamily(str, subfamily_kind::differential).elements;
  const self_map d = shift_derivation(str).restricted_to(ds);
  const carrier i0 = make_subfamily(str, subfamily_kind::differential_ideal, 0).elements;
  CHECK(differential_closure(ds, i0, d) == ds);

  const closure_trace trace = differential_closure_trace(ds, i0, d);
  CHECK(trace.closure == ds);
  for (const orbit_trace& orbit : trace.orbits) {
    CHECK(orbit.entered_ideal);
    CHECK(orbit.entry_step == str.index_of(orbit.start()));
  }
}

TEST_CASE("bottom-region deltas pull the whole string into the boundary ideal") {
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = a + 1; b <= n - 1; ++b) {
        const string_type2 str(chain(n), a, b);
        const carrier ideal = make_subfamily(str, subfamily_kind::constants).elements;
        for (int k = 0; k <= n - b - 1; ++k)
          CHECK(differential_closure(str.elements(), ideal, delta(str, k)) ==
                str.elements());
        CHECK(differential_closure(str.elements(), ideal, delta(str, n - a)) ==
              str.elements());
      }
}

TEST_CASE("idempotent-region deltas close onto the bottom plus the top nilpotents") {
  for (int n = 2; n <= 6; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = a + 1; b <= n - 1; ++b) {
        const string_type2 str(chain(n), a, b);
        const carrier ideal = make_subfamily(str, subfamily_kind::constants).elements;
        carrier expected = make_subfamily(str, subfamily_kind::b_nilpotents)
                               .elements.merged_with(carrier(chain(n), {str.at(0)}));
        for (int k = n - b; k <= n - a - 1; ++k) {
          const carrier closure = differential_closure(str.elements(), ideal, delta(str, k));
          CHECK(closure == expected);
          // equal to the ideal itself exactly in the bottom-anchored case
          CHECK((closure == ideal) == (a == 0));
        }
      }
}

TEST_CASE("the closure operator is extensive, monotone and idempotent") {
  const string_type2 str(chain(6), 1, 4);
  const self_map d = delta(str, 2);
  const carrier ideal = make_subfamily(str, subfamily_kind::constants).elements;
  const carrier small(chain(6), {str.at(0)});
  const carrier from_small = differential_closure(str.elements(), small, d);
  const carrier from_ideal = differential_closure(str.elements(), ideal, d);
  CHECK(small.subset_of(from_small));
  CHECK(ideal.subset_of(from_ideal));
  CHECK(from_small.subset_of(from_ideal));  // monotone in the ideal
  // closing again over the computed closure changes nothing
  const self_map d_restricted = d.restricted_to(from_ideal);
  CHECK(differential_closure(from_ideal, from_ideal, d_restricted) == from_ideal);
}

TEST_CASE("computed closures are differential subsemirings") {
  for (int n = 2; n <= 6; ++n) {
    const string_type2 str(chain(n), 0, n - 1);
    const carrier ideal = make_subfamily(str, subfamily_kind::constants).elements;
    for (int k = 0; k <= n; ++k) {
      const self_map d = delta(str, k);
      const carrier closure = differential_closure(str.elements(), ideal, d);
      for (const endo& x : closure) {
        CHECK(closure.contains(d(x)));
        for (const endo& y : closure) {
          CHECK(closure.contains(add(x, y)));
          CHECK(closure.contains(compose(x, y)));
        }
      }
    }
  }
}

TEST_CASE("input validation") {
  const string_type2 str(chain(4), 1, 2);
  const self_map d = delta(str, 1);
  const carrier outside(chain(4), {endo::make(chain(4), {0, 1, 2, 3})});
  CHECK_THROWS_AS(differential_closure(str.elements(), outside, d), error);

  const carrier ds = make_subfamily(str, subfamily_kind::differential).elements;
  CHECK_THROWS_AS(differential_closure(ds, carrier(chain(4), {str.at(0)}), d), error);

  // a map that leaves the carrier is rejected
  const self_map leave = self_map::tabulate(
      "leave", ds, str.elements(), [&](const endo& x) {
        return x == str.at(0) ? str.at(4) : x;
      });
  CHECK_THROWS_AS(differential_closure(ds, carrier(chain(4), {str.at(0)}), leave), error);
}

}  // TEST_SUITE
