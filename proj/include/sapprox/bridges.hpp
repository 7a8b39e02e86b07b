#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sapprox/evidence.hpp"
#include "sapprox/monotone.hpp"
#include "sapprox/regions.hpp"
#include "sapprox/space.hpp"

namespace sapprox {

enum class Enforce { strict, permissive };

// Candidate focal-set -> mass map produced by one of the induction
// constructions, together with a validity verdict against the belief
// structure invariants. Negative or zero masses are kept and reported, never
// hidden: the result doubles as an empirical check of the construction's
// hypotheses.
struct InducedMassResult {
  UniversePtr universe;
  std::map<ElementSet, Rational, SetNumericLess> masses;
  bool valid = false;
  std::vector<std::string> diagnostics;

  // The realized structure: zero-mass support entries are dropped. Throws if
  // the candidate is not a valid belief structure.
  BeliefStructure to_belief() const {
    std::vector<std::pair<ElementSet, Rational>> entries;
    for (const auto& [set, mass] : masses)
      if (!mass.is_zero()) entries.emplace_back(set, mass);
    return BeliefStructure::build(universe, entries);
  }
};

// The full lower-quality table X -> |POS(X)| / |U| over the powerset of W.
inline SetFunction lower_quality_function(const Space& g) {
  require_enumerable(*g.w(), "lower_quality_function");
  const std::size_t n = std::size_t(1) << g.w()->size();
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    values.push_back(quality(g, ElementSet::from_mask(g.w(), std::uint64_t(m))).q_lower);
  return make_set_function(g.w(), std::move(values));
}

inline SetFunction upper_quality_function(const Space& g) {
  require_enumerable(*g.w(), "upper_quality_function");
  const std::size_t n = std::size_t(1) << g.w()->size();
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t m = 0; m < n; ++m)
    values.push_back(quality(g, ElementSet::from_mask(g.w(), std::uint64_t(m))).q_upper);
  return make_set_function(g.w(), std::move(values));
}

namespace detail {

inline void append_candidate_diagnostics(InducedMassResult& result, bool allow_zero_support) {
  Rational total(0);
  bool ok = true;
  for (const auto& [set, mass] : result.masses) {
    total += mass;
    if (mass.is_negative()) {
      result.diagnostics.push_back("negative mass on " + set.repr() + ": " + mass.str());
      ok = false;
    } else if (mass.is_zero()) {
      if (allow_zero_support)
        result.diagnostics.push_back("support mismatch: zero mass on " + set.repr());
      else
        ok = false;
    }
    if (set.is_empty() && !mass.is_zero()) {
      result.diagnostics.push_back("mass on the empty set: " + mass.str());
      ok = false;
    }
  }
  if (total != Rational(1)) {
    result.diagnostics.push_back("total mass " + total.str() + " != 1/1");
    ok = false;
  }
  result.valid = ok;
}

}  // namespace detail

// Moebius inversion of the lower quality turns an irreducible partial
// monotone space into a candidate mass map; the support is every subset with
// a nonzero coefficient. Whether the coefficients are all nonnegative depends
// on the decider, so the verdict is computed, not assumed. strict mode
// rejects spaces that miss the hypotheses; permissive mode computes anyway
// and records which hypotheses fail.
inline InducedMassResult belief_from_space(const Space& g, Enforce mode = Enforce::strict) {
  require_enumerable(*g.w(), "belief_from_space");
  InducedMassResult result;
  result.universe = g.w();

  const ElementSet trivial = trivial_elements(g);
  if (!trivial.is_empty()) {
    const std::string msg = "space is reducible; trivial elements: " + trivial.repr();
    if (mode == Enforce::strict) throw ValidationError(msg);
    result.diagnostics.push_back("hypothesis failed: " + msg);
  }

  const SetFunction masses = mobius(lower_quality_function(g));
  for (std::size_t m = 0; m < masses.values.size(); ++m)
    if (!masses.values[m].is_zero())
      result.masses.emplace(ElementSet::from_mask(g.w(), std::uint64_t(m)), masses.values[m]);

  detail::append_candidate_diagnostics(result, false);
  return result;
}

// Builds a space whose lower and upper qualities reproduce Bel and Pl of the
// given structure exactly: U has one element per unit of the common
// denominator, focal elements are processed in ascending canonical order and
// each receives a block of fresh elements mapped to it, and the decider is
// set inclusion. Element labels are "e1".."ed", so the output is byte-stable.
inline Space space_from_belief(const BeliefStructure& bs) {
  constexpr std::int64_t max_constructed_u = 1'000'000;
  std::int64_t d = 1;
  for (const auto& [set, mass] : bs.masses()) {
    (void)set;
    const std::int64_t den = mass.den();
    const std::int64_t g = std::gcd(d, den);
    const __int128 l = __int128(d / g) * den;
    if (l > max_constructed_u)
      throw SizeCapError("common denominator of the masses exceeds " +
                         std::to_string(max_constructed_u) + "; U would not be materializable");
    d = std::int64_t(l);
  }

  std::vector<std::string> u_labels;
  std::vector<ElementSet> images;
  u_labels.reserve(std::size_t(d));
  images.reserve(std::size_t(d));
  for (const auto& [set, mass] : bs.masses()) {
    const std::int64_t block = mass.num() * (d / mass.den());
    for (std::int64_t i = 0; i < block; ++i) {
      u_labels.push_back("e" + std::to_string(u_labels.size() + 1));
      images.push_back(set);
    }
  }

  UniversePtr u = Universe::make(std::move(u_labels));
  return Space(std::move(u), bs.universe(), std::move(images), Decider::subseteq(bs.universe()));
}

// Given a belief structure on U and an irreducible partial monotone space
// G = (U, W, T, S), induces masses on W: each focal element splits its mass
// equally among its members, and each member passes its share on, equally
// split across its minimal accepted sets. The support is every set that is
// minimal for some element of U, so entries that end up with zero mass are
// kept and flagged as a support mismatch.
inline InducedMassResult induce_belief(const BeliefStructure& bs_u, const Space& g,
                                       Enforce mode = Enforce::strict) {
  require_same_universe(bs_u.universe(), g.u());
  require_enumerable(*g.w(), "induce_belief");

  InducedMassResult result;
  result.universe = g.w();

  const ElementSet trivial = trivial_elements(g);
  if (!trivial.is_empty()) {
    const std::string msg = "space is reducible; trivial elements: " + trivial.repr();
    if (mode == Enforce::strict) throw ValidationError(msg);
    result.diagnostics.push_back("hypothesis failed: " + msg);
  }

  const std::vector<std::vector<ElementSet>> inflections = inflection_set(g);
  for (const auto& antichain : inflections)
    for (const auto& minimal : antichain) result.masses.emplace(minimal, Rational(0));

  for (const auto& [focal, mass] : bs_u.masses()) {
    const Rational share = mass / Rational(std::int64_t(focal.count()));
    focal.for_each_index([&](std::size_t x) {
      const auto& antichain = inflections[x];
      if (antichain.empty()) return;  // trivial element, permissive mode only
      const Rational piece = share / Rational(std::int64_t(antichain.size()));
      for (const auto& minimal : antichain) result.masses.at(minimal) += piece;
    });
  }

  detail::append_candidate_diagnostics(result, true);
  return result;
}

}  // namespace sapprox
