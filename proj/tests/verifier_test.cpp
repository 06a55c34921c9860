#include <algorithm>
#include <set>

#include "doctest.h"
#include "endochain/verifier.hpp"

using namespace endochain;

namespace {

verification_result run(std::string_view id, int n) {
  return verify_claim(id, claim_params{n, {}, {}});
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("the registry is the closed catalog of 29 claims") {
  CHECK(claim_ids.size() == 29);
  const std::set<std::string_view> unique(claim_ids.begin(), claim_ids.end());
  CHECK(unique.size() == 29);
  for (std::string_view id : claim_ids) {
    CHECK(is_known_claim(id));
    CHECK_FALSE(claim_description(id).empty());
  }
  CHECK_FALSE(is_known_claim("9.9"));
  CHECK_THROWS_AS(verify_claim("9.9", claim_params{4, {}, {}}), error);
  CHECK_THROWS_AS(verify_claim("3.2", claim_params{1, {}, {}}), error);
  CHECK_THROWS_AS(verify_claim("3.2", claim_params{4, 2, {}}), error);
  CHECK_THROWS_AS(verify_claim("3.2", claim_params{4, 3, 2}), error);
}

TEST_CASE("narrowed parameters are honored") {
  CHECK(verify_claim("3.2", claim_params{7, 2, 5}).status == verify_status::pass);
  CHECK(verify_claim("5.1", claim_params{6, 0, 3}).status == verify_status::pass);
}

TEST_CASE("pinned counterexample claims reproduce with their witnesses") {
  const verification_result r71 = run("7.1", 4);
  CHECK(r71.status == verify_status::pass);
  REQUIRE(r71.counterexample.has_value());
  auto field = [](const verification_result& r, const std::string& key) {
    for (const auto& [k, v] : r.counterexample->fields)
      if (k == key) return v;
    return std::string();
  };
  CHECK(field(r71, "x") == "<0,0,1,1>");
  CHECK(field(r71, "y") == "<2,2,3,3>");
  CHECK(field(r71, "x*y") == "<2,2,2,2>");
  CHECK(field(r71, "lhs") == "<2,2,2,2>");
  CHECK(field(r71, "rhs") == "<3,3,3,3>");
  CHECK(run("7.1", 3).status == verify_status::info);

  const verification_result r74 = run("7.4", 4);
  CHECK(r74.status == verify_status::pass);
  REQUIRE(r74.counterexample.has_value());
  CHECK(field(r74, "x") == "<1,1,1,1>");
  CHECK(field(r74, "y") == "<2,2,3,3>");
  CHECK(field(r74, "x*y") == "<2,2,2,2>");
  CHECK(field(r74, "lhs") == "<2,2,2,2>");
  CHECK(field(r74, "rhs") == "<3,3,3,3>");
  // canonical-first witness differs from the pinned pair and is recorded
  REQUIRE_FALSE(r74.notes.empty());
  CHECK(r74.notes.front() ==
        "info: canonical-first witness on the union: (<0,0,0,0>, <2,3,3,3>)");
}

TEST_CASE("claim 5.6 fails from n = 3 on with the computed closure as witness") {
  CHECK(run("5.6", 2).status == verify_status::pass);
  const verification_result r = run("5.6", 3);
  CHECK(r.status == verify_status::fail);
  REQUIRE(r.counterexample.has_value());
  bool found_params = false, found_computed = false;
  for (const auto& [k, v] : r.counterexample->fields) {
    if (k == "params") found_params = v == "a=1 b=2";
    if (k == "computed") found_computed = v == "a_0 a_2 a_3 ";
  }
  CHECK(found_params);
  CHECK(found_computed);
}

TEST_CASE("claim 6.2 fails from n = 3 on with the escaping element as witness") {
  CHECK(run("6.2", 2).status == verify_status::pass);
  const verification_result r = run("6.2", 3);
  CHECK(r.status == verify_status::fail);
  REQUIRE(r.counterexample.has_value());
  bool found = false;
  for (const auto& [k, v] : r.counterexample->fields)
    if (k == "escaping element" && v == "<0,0,2>") found = true;
  CHECK(found);
}

TEST_CASE("every other claim passes for n up to 6") {
  for (std::string_view id : claim_ids) {
    if (id == "5.6" || id == "6.2") continue;
    for (int n = 2; n <= 6; ++n) {
      const verification_result r = verify_claim(id, claim_params{n, {}, {}});
      INFO(r.claim, " at n=", n, ": ",
           r.counterexample ? r.counterexample->summary : "");
      CHECK(r.status != verify_status::fail);
    }
  }
}

TEST_CASE("suite runs are deterministic") {
  const auto first = run_suite(2, 4);
  const auto second = run_suite(2, 4);
  REQUIRE(first.size() == second.size());
  CHECK(first.size() == claim_ids.size() * 3);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].claim == second[i].claim);
    CHECK(first[i].params == second[i].params);
    CHECK(first[i].status == second[i].status);
    CHECK(first[i].notes == second[i].notes);
    CHECK(first[i].counterexample.has_value() == second[i].counterexample.has_value());
    if (first[i].counterexample) {
      CHECK(first[i].counterexample->summary == second[i].counterexample->summary);
      CHECK(first[i].counterexample->fields == second[i].counterexample->fields);
    }
  }
  CHECK(run_suite(5, 4).empty());
  CHECK_FALSE(all_passed(first));  // 5.6 and 6.2 fail by content
}

TEST_CASE("counterexample search resolves specs and scans canonically") {
  // gapped string: the construction yields a violation
  CHECK(search_counterexample("delta:2,1", "str:0,2,3", 4).has_value());
  // two-anchor strings: symmetrized maps are derivations
  CHECK_FALSE(search_counterexample("delta:1", "str:2,3", 4).has_value());
  // the shift map on its subfamily
  CHECK_FALSE(search_counterexample("D", "DS:1,3", 5).has_value());
  // low top-segment maps on the full string: violations exist from n = 3
  CHECK(search_counterexample("delta:1,2", "full", 3).has_value());
  const auto w = search_counterexample("delta:1,2", "full", 3);
  CHECK(w->x.str() == "<0,0,0>");
  CHECK(w->y.str() == "<1,2,2>");

  CHECK_THROWS_AS(search_counterexample("delta:1", "full", 4), error);
  CHECK_THROWS_AS(search_counterexample("D", "CO", 4), error);
  CHECK_THROWS_AS(search_counterexample("shift", "str:2,3", 4), error);
  CHECK_THROWS_AS(search_counterexample("delta:1", "nonsense", 4), error);
}

}  // TEST_SUITE
