#pragma once

#include "sapprox/rational.hpp"
#include "sapprox/space.hpp"

namespace sapprox {

// The three-way partition of U induced by the decider's verdicts on a query
// set and its complement. pos, neg and br are pairwise disjoint and cover U.
struct RegionDecomposition {
  ElementSet pos;
  ElementSet neg;
  ElementSet br;
  ElementSet query;  // over W
};

struct QualityPair {
  Rational q_lower;  // |pos| / |U|
  Rational q_upper;  // (|pos| + |br|) / |U|
};

inline ElementSet lower_approx(const Space& g, const ElementSet& x) {
  require_same_universe(x.universe(), g.w());
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (g.decider().eval(g.image(i), x)) out = out.with(i);
  return out;
}

inline ElementSet upper_approx(const Space& g, const ElementSet& x) {
  require_same_universe(x.universe(), g.w());
  const ElementSet xc = x.complement();
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (!g.decider().eval(g.image(i), xc)) out = out.with(i);
  return out;
}

// Evaluates both defining forms of the trichotomy (the raw decider conditions
// and the lower/upper set algebra) and checks they agree before returning the
// set-algebra form.
inline RegionDecomposition decompose(const Space& g, const ElementSet& x) {
  require_same_universe(x.universe(), g.w());
  const ElementSet xc = x.complement();

  ElementSet raw_pos = ElementSet::empty(g.u());
  ElementSet raw_neg = ElementSet::empty(g.u());
  ElementSet raw_br = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i) {
    const bool on_x = g.decider().eval(g.image(i), x);
    const bool on_xc = g.decider().eval(g.image(i), xc);
    if (on_x && !on_xc)
      raw_pos = raw_pos.with(i);
    else if (!on_x && on_xc)
      raw_neg = raw_neg.with(i);
    else
      raw_br = raw_br.with(i);
  }

  const ElementSet lower = lower_approx(g, x);
  const ElementSet upper = upper_approx(g, x);
  const ElementSet pos = lower & upper;
  const ElementSet neg = (lower | upper).complement();
  const ElementSet br = lower ^ upper;
  if (pos != raw_pos || neg != raw_neg || br != raw_br)
    throw Error("internal: the two defining forms of the region decomposition disagree");
  return RegionDecomposition{pos, neg, br, x};
}

inline QualityPair quality(const Space& g, const ElementSet& x) {
  const RegionDecomposition r = decompose(g, x);
  const auto n = std::int64_t(g.u()->size());
  return QualityPair{Rational(std::int64_t(r.pos.count()), n),
                     Rational(std::int64_t(r.pos.count() + r.br.count()), n)};
}

}  // namespace sapprox
