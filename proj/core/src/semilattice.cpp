#include "endochain/semilattice.hpp"

namespace endochain {

semilattice_report analyze_derivation_set(std::span<const self_map> maps) {
  require(!maps.empty(), errc::bad_params, "need at least one map to analyze");
  for (const self_map& m : maps) {
    require(m.domain() == maps.front().domain() && m.ambient() == maps.front().ambient(),
            errc::domain_mismatch, "all maps must share domain and ambient");
    require(m.domain() == m.ambient(), errc::domain_mismatch,
            "analysis expects maps whose domain equals their ambient");
    require(m.domain_invariant(), errc::not_invariant,
            m.label() + " does not leave the domain invariant");
  }

  semilattice_report rep;
  for (const self_map& m : maps) {
    bool found = false;
    for (std::size_t r = 0; r < rep.representatives.size(); ++r)
      if (rep.representatives[r].same_action_as(m)) {
        rep.collapsed[r].push_back(m.label());
        found = true;
        break;
      }
    if (!found) {
      rep.representatives.push_back(m);
      rep.collapsed.push_back({m.label()});
    }
  }

  const int d = rep.distinct_maps();
  rep.table.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), -1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      self_map comp = compose_maps(rep.representatives[static_cast<std::size_t>(i)],
                                   rep.representatives[static_cast<std::size_t>(j)]);
      for (int r = 0; r < d; ++r)
        if (rep.representatives[static_cast<std::size_t>(r)].same_action_as(comp)) {
          rep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r;
          break;
        }
      if (rep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0)
        rep.closed = false;
    }

  for (int i = 0; i < d && rep.commutative; ++i)
    for (int j = 0; j < d; ++j)
      if (rep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          rep.table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        rep.commutative = false;
        break;
      }
  for (int i = 0; i < d; ++i)
    if (rep.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != i) {
      rep.idempotent = false;
      break;
    }

  for (int e = 0; e < d; ++e) {
    bool identity = true;
    for (int x = 0; x < d && identity; ++x)
      identity = rep.table[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] == x &&
                 rep.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] == x;
    if (identity) {
      rep.identity = e;
      break;
    }
  }
  for (int z = 0; z < d; ++z) {
    bool absorbing = true;
    for (int x = 0; x < d && absorbing; ++x)
      absorbing = rep.table[static_cast<std::size_t>(z)][static_cast<std::size_t>(x)] == z &&
                  rep.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] == z;
    if (absorbing) {
      rep.absorbing = z;
      break;
    }
  }
  return rep;
}

semilattice_report analyze_string_derivations(const string_type2& str) {
  std::vector<self_map> maps;
  maps.reserve(static_cast<std::size_t>(str.top_index()) + 1);
  for (int k = 0; k <= str.top_index(); ++k) maps.push_back(delta(str, k));
  return analyze_derivation_set(maps);
}

}  // namespace endochain
