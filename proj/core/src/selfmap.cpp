#include "endochain/selfmap.hpp"

#include <algorithm>

namespace endochain {

self_map::self_map(std::string label, carrier domain, carrier ambient,
                   std::vector<int> table)
    : label_(std::move(label)),
      domain_(std::move(domain)),
      ambient_(std::move(ambient)),
      table_(std::move(table)) {
  require(domain_.subset_of(ambient_), errc::not_a_subset,
          "self-map domain must lie inside its ambient carrier");
  require(static_cast<int>(table_.size()) == domain_.size(), errc::length_mismatch,
          "self-map table must cover the domain");
  for (int v : table_)
    require(0 <= v && v < ambient_.size(), errc::escapes_ambient,
            "self-map table entry outside the ambient carrier");
}

self_map self_map::tabulate(std::string label, const carrier& domain,
                            const carrier& ambient,
                            const std::function<endo(const endo&)>& fn) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(domain.size()));
  for (const endo& x : domain) {
    endo v = fn(x);
    auto ix = ambient.index_of(v);
    require(ix.has_value(), errc::escapes_ambient,
            label + " sends " + x.str() + " to " + v.str() +
                ", which is outside the ambient carrier");
    table.push_back(*ix);
  }
  return self_map(std::move(label), domain, ambient, std::move(table));
}

const endo& self_map::operator()(const endo& x) const {
  auto ix = domain_.index_of(x);
  require(ix.has_value(), errc::domain_mismatch,
          x.str() + " is not in the domain of " + label_);
  return value_at(*ix);
}

self_map self_map::restricted_to(const carrier& sub, std::string label) const {
  require(sub.subset_of(domain_), errc::not_a_subset,
          "restriction target is not a subset of the domain");
  if (label.empty()) label = label_;
  return tabulate(std::move(label), sub, ambient_,
                  [this](const endo& x) { return (*this)(x); });
}

bool self_map::domain_invariant() const {
  for (int i = 0; i < domain_.size(); ++i)
    if (!domain_.contains(value_at(i))) return false;
  return true;
}

self_map shift_derivation(const string_type2& str) {
  return self_map::tabulate("D", str.elements(), str.elements(),
                            [&](const endo& x) {
                              const int k = str.index_of(x);
                              return str.at(k == 0 ? 0 : k - 1);
                            });
}

self_map delta(const endo& alpha, const carrier& domain, const carrier& ambient,
               std::string label) {
  if (label.empty()) label = "delta(" + alpha.str() + ")";
  return self_map::tabulate(std::move(label), domain, ambient,
                            [&alpha](const endo& x) {
                              return add(compose(alpha, x), compose(x, alpha));
                            });
}

self_map delta(const endo& alpha, const carrier& c, std::string label) {
  return delta(alpha, c, c, std::move(label));
}

self_map delta(const string_type2& str, int alpha_index) {
  return delta(str.at(alpha_index), str.elements(), str.elements(),
               "delta(" + str.label(alpha_index) + ")");
}

self_map delta(const string_type_m& str, index_m alpha_index) {
  return delta(str.at(alpha_index), str.elements(), str.elements(),
               "delta(" + str.label(alpha_index) + ")");
}

namespace {

// Shared scan for the two defining identities. Pairs are visited in
// canonical (lexicographic) order and the first violation is returned.
template <typename Law>
law_result scan_pairs(const self_map& m, Law law) {
  const carrier& dom = m.domain();
  law_result out;
  for (int i = 0; i < dom.size(); ++i)
    for (int j = 0; j < dom.size(); ++j) {
      auto [lhs, rhs] = law(dom[i], dom[j]);
      if (!(lhs == rhs)) {
        out.holds = false;
        out.witness = pair_witness{dom[i], dom[j], std::move(lhs), std::move(rhs)};
        return out;
      }
    }
  return out;
}

const endo& image_in_domain(const self_map& m, const endo& v, const char* law) {
  auto ix = m.domain().index_of(v);
  require(ix.has_value(), errc::domain_not_closed,
          std::string(law) + " check: " + v.str() +
              " falls outside the domain of " + m.label());
  return m.value_at(*ix);
}

}  // namespace

law_result is_additive(const self_map& m) {
  return scan_pairs(m, [&](const endo& x, const endo& y) {
    endo sum = add(x, y);
    endo lhs = image_in_domain(m, sum, "additivity");
    endo rhs = add(m(x), m(y));
    return std::pair<endo, endo>(std::move(lhs), std::move(rhs));
  });
}

law_result satisfies_leibniz(const self_map& m) {
  return scan_pairs(m, [&](const endo& x, const endo& y) {
    endo prod = compose(x, y);
    endo lhs = image_in_domain(m, prod, "leibniz");
    endo rhs = add(compose(m(x), y), compose(x, m(y)));
    return std::pair<endo, endo>(std::move(lhs), std::move(rhs));
  });
}

derivation_result is_derivation(const self_map& m) {
  derivation_result out;
  if (law_result additive = is_additive(m); !additive.holds) {
    out.holds = false;
    out.which_failed = "additive";
    out.witness = std::move(additive.witness);
    return out;
  }
  if (law_result leibniz = satisfies_leibniz(m); !leibniz.holds) {
    out.holds = false;
    out.which_failed = "leibniz";
    out.witness = std::move(leibniz.witness);
  }
  return out;
}

commute_result maps_commute(const self_map& m1, const self_map& m2) {
  require(m1.domain() == m2.domain() && m1.ambient() == m2.ambient(),
          errc::domain_mismatch, "commutation needs equal domain and ambient");
  require(m1.domain_invariant(), errc::not_invariant,
          m1.label() + " does not leave the domain invariant");
  require(m2.domain_invariant(), errc::not_invariant,
          m2.label() + " does not leave the domain invariant");
  commute_result out;
  const carrier& dom = m1.domain();
  for (const endo& x : dom) {
    endo first = m2(m1(x));
    endo second = m1(m2(x));
    if (!(first == second)) {
      out.holds = false;
      out.at = x;
      out.m1_first = std::move(first);
      out.m2_first = std::move(second);
      return out;
    }
  }
  return out;
}

self_map compose_maps(const self_map& first, const self_map& then) {
  require(first.domain() == then.domain() && first.ambient() == then.ambient(),
          errc::domain_mismatch, "composition needs equal domain and ambient");
  require(first.domain_invariant(), errc::not_invariant,
          first.label() + " does not leave the domain invariant");
  return self_map::tabulate("(" + first.label() + ";" + then.label() + ")",
                            first.domain(), first.ambient(),
                            [&](const endo& x) { return then(first(x)); });
}

law_result iterated_leibniz_check(const self_map& d, int order) {
  require(order >= 1, errc::bad_params, "iterated Leibniz needs order >= 1");
  require(is_derivation(d).holds, errc::not_a_derivation,
          d.label() + " is not a derivation on its domain");
  require(d.domain_invariant(), errc::not_invariant,
          d.label() + " does not leave the domain invariant");
  // iterates d^0 .. d^order as endo tables over the domain
  const carrier& dom = d.domain();
  std::vector<std::vector<endo>> pow;
  std::vector<endo> level(dom.begin(), dom.end());
  pow.push_back(level);
  for (int t = 1; t <= order; ++t) {
    for (endo& v : level) v = d(v);
    pow.push_back(level);
  }
  auto iterate = [&](const endo& x, int t) {
    return pow[static_cast<std::size_t>(t)][static_cast<std::size_t>(*dom.index_of(x))];
  };
  return scan_pairs(d, [&](const endo& x, const endo& y) {
    endo prod = compose(x, y);
    require(dom.contains(prod), errc::domain_not_closed,
            "iterated Leibniz check: " + prod.str() + " escapes the domain");
    endo lhs = iterate(prod, order);
    endo rhs = compose(iterate(x, order), y);
    for (int k = 1; k <= order; ++k)
      rhs = add(rhs, compose(iterate(x, order - k), iterate(y, k)));
    return std::pair<endo, endo>(std::move(lhs), std::move(rhs));
  });
}

constants_delta_report delta_on_constants(const endo& alpha_sr,
                                          const string_type_m& str) {
  const index_m sr = str.index_of(alpha_sr);  // not_in_string when absent
  const int n = str.base_chain().size();
  const auto& anchors = str.anchors();
  const int lower = anchors[static_cast<std::size_t>(sr.seg - 1)];
  const int upper = anchors[static_cast<std::size_t>(sr.seg)];
  const int s = sr.k;

  constants_delta_report out;
  const subfamily consts = constants_ideal(str);
  for (const endo& kappa : consts.elements) {
    endo value = add(compose(alpha_sr, kappa), compose(kappa, alpha_sr));
    const int c = kappa(0);
    endo predicted = c >= upper ? kappa
                     : c <= n - s - 1
                         ? endo::constant(str.base_chain(), lower)
                         : endo::constant(str.base_chain(), upper);
    if (out.formula.holds && !(value == predicted)) {
      out.formula.holds = false;
      out.formula.witness = pair_witness{kappa, alpha_sr, value, predicted};
    }
    out.images.emplace_back(kappa, std::move(value));
  }
  auto delta_of = [&](const endo& x) {
    return add(compose(alpha_sr, x), compose(x, alpha_sr));
  };
  for (const endo& ki : consts.elements) {
    for (const endo& kj : consts.elements) {
      endo lhs = delta_of(compose(ki, kj));
      endo rhs = add(compose(delta_of(ki), kj), compose(ki, delta_of(kj)));
      if (!(lhs == rhs)) {
        out.leibniz.holds = false;
        out.leibniz.witness = pair_witness{ki, kj, std::move(lhs), std::move(rhs)};
        return out;
      }
    }
  }
  return out;
}

}  // namespace endochain
