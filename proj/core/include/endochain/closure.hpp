#ifndef ENDOCHAIN_CLOSURE_HPP
#define ENDOCHAIN_CLOSURE_HPP

#include <vector>

#include "endochain/carrier.hpp"
#include "endochain/selfmap.hpp"

namespace endochain {

/// The elements of r driven into i by finitely many applications of d
/// (zero applications included). Orbits in a finite set cycle within
/// |r| steps, so |r| iterations per element decide membership exactly.
carrier differential_closure(const carrier& r, const carrier& i, const self_map& d);

struct orbit_trace {
  std::vector<endo> steps;  // start, d(start), ... up to entry or cycle
  bool entered_ideal = false;
  int entry_step = -1;

  const endo& start() const { return steps.front(); }
};

struct closure_trace {
  carrier closure;
  std::vector<orbit_trace> orbits;
};

closure_trace differential_closure_trace(const carrier& r, const carrier& i,
                                         const self_map& d);

}  // namespace endochain

#endif
