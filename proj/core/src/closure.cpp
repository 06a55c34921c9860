#include "endochain/closure.hpp"

#include <algorithm>

namespace endochain {

namespace {

void check_closure_inputs(const carrier& r, const carrier& i, const self_map& d) {
  require(i.subset_of(r), errc::not_a_subset,
          "the ideal must be a subset of the carrier being closed");
  require(d.domain() == r, errc::domain_mismatch,
          "the derivation must be defined exactly on the carrier being closed");
  for (int pos = 0; pos < r.size(); ++pos)
    require(r.contains(d.value_at(pos)), errc::not_invariant,
            d.label() + " sends " + r[pos].str() + " outside the carrier");
}

}  // namespace

carrier differential_closure(const carrier& r, const carrier& i, const self_map& d) {
  check_closure_inputs(r, i, d);
  std::vector<endo> members;
  for (int pos = 0; pos < r.size(); ++pos) {
    endo y = r[pos];
    for (int step = 0; step <= r.size(); ++step) {
      if (i.contains(y)) {
        members.push_back(r[pos]);
        break;
      }
      y = d(y);
    }
  }
  return carrier(r.base_chain(), std::move(members));
}

closure_trace differential_closure_trace(const carrier& r, const carrier& i,
                                         const self_map& d) {
  check_closure_inputs(r, i, d);
  closure_trace out{carrier(r.base_chain(), {}), {}};
  std::vector<endo> members;
  for (int pos = 0; pos < r.size(); ++pos) {
    orbit_trace trace;
    std::vector<int> seen;
    int y = pos;
    for (int step = 0;; ++step) {
      trace.steps.push_back(r[y]);
      if (i.contains(r[y])) {
        trace.entered_ideal = true;
        trace.entry_step = step;
        break;
      }
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) break;  // cycle
      seen.push_back(y);
      y = *r.index_of(d.value_at(y));
    }
    if (trace.entered_ideal) members.push_back(r[pos]);
    out.orbits.push_back(std::move(trace));
  }
  out.closure = carrier(r.base_chain(), std::move(members));
  return out;
}

}  // namespace endochain
