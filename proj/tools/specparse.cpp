#include "specparse.hpp"

#include <charconv>

namespace endochain::cli {

std::vector<int> parse_csv_ints(std::string_view text, errc code) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + next, value);
    if (ec != std::errc() || ptr != text.data() + next)
      raise(code, "expected comma-separated integers, got '" + std::string(text) + "'");
    out.push_back(value);
    if (next == text.size()) break;
    pos = next + 1;
  }
  return out;
}

std::vector<int> string_context::anchors() const {
  if (two) return {two->a(), two->b()};
  return multi->anchors();
}

std::string string_context::label_at(int pos) const {
  if (two) return two->label(pos);
  return multi->label(multi->at_position(pos));
}

std::string string_context::label_of(const endo& x) const {
  if (two) return two->label(two->index_of(x));
  return multi->label(multi->index_of(x));
}

string_context parse_string_spec(int n, std::string_view spec) {
  const std::vector<int> anchors = parse_csv_ints(spec, errc::bad_anchors);
  require(anchors.size() >= 2, errc::bad_anchors, "need at least two anchors");
  string_context ctx;
  if (anchors.size() == 2)
    ctx.two.emplace(chain(n), anchors[0], anchors[1]);
  else
    ctx.multi.emplace(chain(n), anchors);
  return ctx;
}

std::pair<int, int> parse_n_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  auto parse_one = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      raise(errc::bad_params, "expected an integer or lo..hi range, got '" +
                                  std::string(text) + "'");
    return value;
  };
  if (dots == std::string_view::npos) {
    const int n = parse_one(text);
    return {n, n};
  }
  const int lo = parse_one(text.substr(0, dots));
  const int hi = parse_one(text.substr(dots + 2));
  require(lo <= hi, errc::bad_params, "empty range '" + std::string(text) + "'");
  return {lo, hi};
}

carrier parse_ideal_spec(const string_context& ctx, std::string_view spec) {
  if (spec == "{0,n}") {
    require(ctx.two.has_value(), errc::spec_resolution,
            "the boundary pair {0,n} needs a two-anchor string");
    return make_subfamily(*ctx.two, subfamily_kind::constants).elements;
  }
  if (spec == "CO") {
    if (ctx.two)
      return make_subfamily(*ctx.two, subfamily_kind::constants).elements;
    return constants_ideal(*ctx.multi).elements;
  }
  if (spec.starts_with("I:")) {
    require(ctx.two.has_value(), errc::spec_resolution,
            "lower ideals I:<j> need a two-anchor string");
    const std::vector<int> j = parse_csv_ints(spec.substr(2), errc::spec_resolution);
    require(j.size() == 1, errc::spec_resolution, "I takes a single index");
    return make_subfamily(*ctx.two, subfamily_kind::differential_ideal, j[0]).elements;
  }
  raise(errc::spec_resolution, "unknown ideal spec '" + std::string(spec) +
                                   "' (expected I:<j>, {0,n} or CO)");
}

closure_setup parse_derivation_spec(const string_context& ctx, std::string_view spec) {
  if (spec == "D") {
    require(ctx.two.has_value(), errc::spec_resolution,
            "the shift map needs a two-anchor string");
    const carrier ds = make_subfamily(*ctx.two, subfamily_kind::differential).elements;
    return {shift_derivation(*ctx.two).restricted_to(ds), ds};
  }
  if (spec.starts_with("delta:")) {
    const std::vector<int> ix = parse_csv_ints(spec.substr(6), errc::spec_resolution);
    if (ix.size() == 1) {
      require(ctx.two.has_value(), errc::spec_resolution,
              "delta:<k> needs a two-anchor string");
      return {delta(*ctx.two, ix[0]), ctx.two->elements()};
    }
    if (ix.size() == 2) {
      require(ctx.multi.has_value(), errc::spec_resolution,
              "delta:<k>,<seg> needs a multi-anchor string");
      return {delta(*ctx.multi, ctx.multi->canonical(index_m{ix[0], ix[1]})),
              ctx.multi->elements()};
    }
  }
  raise(errc::spec_resolution, "unknown derivation spec '" + std::string(spec) +
                                   "' (expected D, delta:<k> or delta:<k>,<seg>)");
}

}  // namespace endochain::cli
