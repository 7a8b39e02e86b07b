#pragma once

// Reference implementations that recompute everything from the raw
// definitions (direct decider evaluation, double sums, proper-subset scans).
// They share no code with the main operation paths and exist so that claims
// and tests can be checked against an independent route.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "sapprox/evidence.hpp"
#include "sapprox/rational.hpp"
#include "sapprox/space.hpp"

namespace sapprox::naive {

inline ElementSet lower(const Space& g, const ElementSet& x) {
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (g.decider().eval(g.image(i), x)) out = out.with(i);
  return out;
}

inline ElementSet upper(const Space& g, const ElementSet& x) {
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (!g.decider().eval(g.image(i), x.complement())) out = out.with(i);
  return out;
}

inline ElementSet pos(const Space& g, const ElementSet& x) {
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (g.decider().eval(g.image(i), x) && !g.decider().eval(g.image(i), x.complement()))
      out = out.with(i);
  return out;
}

inline ElementSet neg(const Space& g, const ElementSet& x) {
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (!g.decider().eval(g.image(i), x) && g.decider().eval(g.image(i), x.complement()))
      out = out.with(i);
  return out;
}

inline ElementSet br(const Space& g, const ElementSet& x) {
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i)
    if (g.decider().eval(g.image(i), x) == g.decider().eval(g.image(i), x.complement()))
      out = out.with(i);
  return out;
}

inline Rational q_lower(const Space& g, const ElementSet& x) {
  return Rational(std::int64_t(pos(g, x).count()), std::int64_t(g.u()->size()));
}

inline Rational q_upper(const Space& g, const ElementSet& x) {
  return Rational(std::int64_t(pos(g, x).count() + br(g, x).count()),
                  std::int64_t(g.u()->size()));
}

// Moebius inversion as the literal alternating double sum over submasks.
inline SetFunction mobius_double_sum(const SetFunction& f) {
  require_total(f, "naive mobius");
  const std::size_t n = f.values.size();
  std::vector<Rational> out(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    Rational acc(0);
    std::uint64_t b = a;
    while (true) {
      const int sign_bits = std::popcount(a ^ b);  // |A \ B|
      if (sign_bits % 2 == 0)
        acc += f.at_mask(b);
      else
        acc -= f.at_mask(b);
      if (b == 0) break;
      b = (b - 1) & a;
    }
    out[std::size_t(a)] = acc;
  }
  return SetFunction{f.universe, std::move(out)};
}

inline Rational bel(const BeliefStructure& bs, const ElementSet& x) {
  require_enumerable(*bs.universe(), "naive bel");
  Rational acc(0);
  const std::uint64_t target = x.mask64();
  std::uint64_t b = target;
  while (true) {
    acc += bs.mass_of(ElementSet::from_mask(bs.universe(), b));
    if (b == 0) break;
    b = (b - 1) & target;
  }
  return acc;
}

inline Rational pl(const BeliefStructure& bs, const ElementSet& x) {
  require_enumerable(*bs.universe(), "naive pl");
  Rational acc(0);
  const std::uint64_t n = std::uint64_t(1) << bs.universe()->size();
  for (std::uint64_t m = 0; m < n; ++m)
    if (m & x.mask64()) acc += bs.mass_of(ElementSet::from_mask(bs.universe(), m));
  return acc;
}

// Minimal accepted sets found by checking every proper submask directly.
inline std::vector<ElementSet> inflection(const Space& g, std::size_t x_index) {
  require_enumerable(*g.w(), "naive inflection");
  const ElementSet& a = g.image(x_index);
  const std::uint64_t n = std::uint64_t(1) << g.w()->size();
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < n; ++m) {
    if (!g.decider().eval(a, ElementSet::from_mask(g.w(), m))) continue;
    bool minimal = true;
    if (m != 0) {
      std::uint64_t b = (m - 1) & m;  // proper submasks, descending
      while (true) {
        if (g.decider().eval(a, ElementSet::from_mask(g.w(), b))) {
          minimal = false;
          break;
        }
        if (b == 0) break;
        b = (b - 1) & m;
      }
    }
    if (minimal) out.push_back(ElementSet::from_mask(g.w(), m));
  }
  return out;
}

// Share-distribution loop for the cross-universe induction, built on the
// naive inflection scan: every focal set splits its mass over its members,
// every member splits its share over its minimal sets.
inline std::map<ElementSet, Rational, SetNumericLess> induce(const BeliefStructure& bs_u,
                                                             const Space& g) {
  std::map<ElementSet, Rational, SetNumericLess> acc;
  std::vector<std::vector<ElementSet>> ip;
  ip.reserve(g.u()->size());
  for (std::size_t i = 0; i < g.u()->size(); ++i) ip.push_back(inflection(g, i));

  for (const auto& [focal, mass] : bs_u.masses()) {
    const Rational share = mass / Rational(std::int64_t(focal.count()));
    focal.for_each_index([&](std::size_t x) {
      if (ip[x].empty()) return;
      const Rational piece = share / Rational(std::int64_t(ip[x].size()));
      for (const auto& y : ip[x]) {
        auto [it, inserted] = acc.emplace(y, piece);
        if (!inserted) it->second += piece;
      }
    });
  }
  return acc;
}

}  // namespace sapprox::naive
