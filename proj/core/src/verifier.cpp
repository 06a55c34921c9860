#include "endochain/verifier.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>

#include "claims_impl.hpp"
#include "endochain/axioms.hpp"

namespace endochain {

const char* to_string(verify_status s) noexcept {
  switch (s) {
    case verify_status::pass: return "pass";
    case verify_status::fail: return "fail";
    case verify_status::info: return "info";
  }
  return "?";
}

bool is_known_claim(std::string_view id) {
  return std::find(claim_ids.begin(), claim_ids.end(), id) != claim_ids.end();
}

std::string_view claim_description(std::string_view id) {
  for (const detail::claim_entry& e : detail::claim_registry())
    if (e.id == id) return e.description;
  raise(errc::unknown_claim, "no claim with id '" + std::string(id) + "'");
}

verification_result verify_claim(std::string_view id, const claim_params& p) {
  const detail::claim_entry* entry = nullptr;
  for (const detail::claim_entry& e : detail::claim_registry())
    if (e.id == id) {
      entry = &e;
      break;
    }
  if (!entry) raise(errc::unknown_claim, "no claim with id '" + std::string(id) + "'");

  detail::claim_run run(p);
  const auto started = std::chrono::steady_clock::now();
  try {
    entry->run(run);
  } catch (const detail::claim_abort&) {
    // first failure recorded in run.failure
  }
  const auto finished = std::chrono::steady_clock::now();

  verification_result out;
  out.claim = std::string(id);
  out.params = "n=" + std::to_string(p.n);
  if (p.a) out.params += " a=" + std::to_string(*p.a) + " b=" + std::to_string(*p.b);
  if (run.failure) {
    out.status = verify_status::fail;
    out.counterexample = std::move(run.failure);
  } else {
    out.status = run.info ? verify_status::info : verify_status::pass;
    out.counterexample = std::move(run.reproduced);
  }
  out.notes = std::move(run.notes);
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();
  return out;
}

std::vector<verification_result> run_suite(int n_lo, int n_hi) {
  return run_suite(n_lo, n_hi, claim_ids);
}

std::vector<verification_result> run_suite(int n_lo, int n_hi,
                                           std::span<const std::string_view> ids) {
  for (std::string_view id : ids)
    require(is_known_claim(id), errc::unknown_claim,
            "no claim with id '" + std::string(id) + "'");
  std::vector<verification_result> out;
  if (n_lo > n_hi) return out;
  require(n_lo >= 2, errc::bad_params, "claims need a chain of size >= 2");
  for (std::string_view id : claim_ids) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
    for (int n = n_lo; n <= n_hi; ++n)
      out.push_back(verify_claim(id, claim_params{n, {}, {}}));
  }
  return out;
}

bool all_passed(std::span<const verification_result> results) {
  return std::none_of(results.begin(), results.end(), [](const verification_result& r) {
    return r.status == verify_status::fail;
  });
}

namespace {

std::vector<int> parse_int_list(std::string_view text, errc code) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + next, value);
    if (ec != std::errc() || ptr != text.data() + next)
      raise(code, "expected a comma-separated integer list, got '" +
                      std::string(text) + "'");
    out.push_back(value);
    if (next == text.size()) break;
    pos = next + 1;
  }
  return out;
}

struct resolved_carrier {
  carrier elements;
  std::optional<string_type2> str2;
  std::optional<string_type_m> strm;
};

resolved_carrier resolve_carrier(std::string_view spec, int n) {
  const chain c(n);
  if (spec == "full") {
    string_type_m full = string_type_m::full(c);
    carrier elems = full.elements();
    return {std::move(elems), std::nullopt, std::move(full)};
  }
  if (spec == "CO") {
    string_type_m full = string_type_m::full(c);
    return {constants_ideal(full).elements, std::nullopt, std::move(full)};
  }
  if (spec == "S") {
    require(n >= 2, errc::spec_resolution, "the invariant union needs n >= 2");
    string_type_m full = string_type_m::full(c);
    const string_type2 top(c, n - 2, n - 1);
    carrier s = constants_ideal(full).elements.merged_with(top.elements());
    return {std::move(s), std::nullopt, std::move(full)};
  }
  if (spec.starts_with("DS:")) {
    const std::vector<int> ab = parse_int_list(spec.substr(3), errc::spec_resolution);
    require(ab.size() == 2, errc::spec_resolution, "DS takes exactly two anchors");
    string_type2 str(c, ab[0], ab[1]);
    carrier ds = make_subfamily(str, subfamily_kind::differential).elements;
    return {std::move(ds), std::move(str), std::nullopt};
  }
  if (spec.starts_with("str:")) {
    const std::vector<int> anchors = parse_int_list(spec.substr(4), errc::spec_resolution);
    require(anchors.size() >= 2, errc::spec_resolution, "need at least two anchors");
    if (anchors.size() == 2) {
      string_type2 str(c, anchors[0], anchors[1]);
      carrier elems = str.elements();
      return {std::move(elems), std::move(str), std::nullopt};
    }
    string_type_m str(c, anchors);
    carrier elems = str.elements();
    return {std::move(elems), std::nullopt, std::move(str)};
  }
  raise(errc::spec_resolution, "unknown carrier spec '" + std::string(spec) + "'");
}

self_map resolve_map(std::string_view spec, const resolved_carrier& rc, int n) {
  const carrier& ambient = rc.str2   ? rc.str2->elements()
                           : rc.strm ? rc.strm->elements()
                                     : rc.elements;
  if (spec == "D") {
    require(rc.str2.has_value(), errc::spec_resolution,
            "the shift map needs a two-anchor string context");
    return shift_derivation(*rc.str2).restricted_to(rc.elements);
  }
  if (spec.starts_with("delta:")) {
    const std::vector<int> ix = parse_int_list(spec.substr(6), errc::spec_resolution);
    if (ix.size() == 1) {
      require(rc.str2.has_value(), errc::spec_resolution,
              "delta:<k> needs a two-anchor string context");
      require(0 <= ix[0] && ix[0] <= n, errc::spec_resolution,
              "delta index outside 0..n");
      return delta(rc.str2->at(ix[0]), rc.elements, ambient,
                   "delta(" + rc.str2->label(ix[0]) + ")");
    }
    if (ix.size() == 2) {
      require(rc.strm.has_value(), errc::spec_resolution,
              "delta:<k>,<seg> needs a multi-anchor string context");
      const index_m cix = rc.strm->canonical(index_m{ix[0], ix[1]});
      return delta(rc.strm->at(cix), rc.elements, ambient,
                   "delta(" + rc.strm->label(cix) + ")");
    }
    raise(errc::spec_resolution, "delta takes one or two indices");
  }
  raise(errc::spec_resolution, "unknown map spec '" + std::string(spec) + "'");
}

}  // namespace

std::optional<pair_witness> search_counterexample(std::string_view map_spec,
                                                  std::string_view carrier_spec,
                                                  int n) {
  const resolved_carrier rc = resolve_carrier(carrier_spec, n);
  const self_map m = resolve_map(map_spec, rc, n);
  if (law_result additive = is_additive(m); !additive.holds) return additive.witness;
  if (law_result leibniz = satisfies_leibniz(m); !leibniz.holds) return leibniz.witness;
  return std::nullopt;
}

}  // namespace endochain
