#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sapprox/rational.hpp"
#include "sapprox/universe.hpp"

namespace sapprox {

// A basic probability assignment together with its focal elements: only the
// nonzero masses are stored, the empty set carries no mass, every stored mass
// is positive, and the masses sum to exactly 1.
class BeliefStructure {
 public:
  using MassMap = std::map<ElementSet, Rational, SetNumericLess>;

  static BeliefStructure build(UniversePtr w, const std::vector<std::pair<ElementSet, Rational>>& entries) {
    MassMap masses;
    Rational total(0);
    for (const auto& [set, mass] : entries) {
      require_same_universe(set.universe(), w);
      if (set.is_empty()) throw ValidationError("mass assigned to the empty set");
      if (!(mass > Rational(0)))
        throw ValidationError("mass for " + set.repr() + " must be positive, got " + mass.str());
      if (!masses.emplace(set, mass).second)
        throw ValidationError("duplicate focal set " + set.repr());
      total += mass;
    }
    if (total != Rational(1))
      throw ValidationError("masses sum to " + total.str() + ", expected 1/1");
    BeliefStructure bs;
    bs.w_ = std::move(w);
    bs.masses_ = std::move(masses);
    return bs;
  }

  static BeliefStructure build_from_labels(
      const std::vector<std::string>& w_labels,
      const std::vector<std::pair<std::vector<std::string>, Rational>>& entries) {
    UniversePtr w = Universe::make(w_labels);
    std::vector<std::pair<ElementSet, Rational>> resolved;
    resolved.reserve(entries.size());
    for (const auto& [labels, mass] : entries)
      resolved.emplace_back(ElementSet::of_labels(w, labels), mass);
    return build(std::move(w), resolved);
  }

  const UniversePtr& universe() const { return w_; }
  const MassMap& masses() const { return masses_; }

  Rational mass_of(const ElementSet& set) const {
    const auto it = masses_.find(set);
    return it == masses_.end() ? Rational(0) : it->second;
  }

 private:
  BeliefStructure() = default;
  UniversePtr w_;
  MassMap masses_;
};

struct EvidenceReading {
  Rational bel;
  Rational pl;
  Rational ignorance;  // pl - bel
};

// Bel(X) sums the masses of focal elements inside X; Pl(X) sums the masses of
// focal elements meeting X. Both range over focal elements only.
inline EvidenceReading evaluate(const BeliefStructure& bs, const ElementSet& x) {
  require_same_universe(x.universe(), bs.universe());
  Rational bel(0);
  Rational pl(0);
  for (const auto& [focal, mass] : bs.masses()) {
    if (focal.subset_of(x)) bel += mass;
    if (focal.intersects(x)) pl += mass;
  }
  return EvidenceReading{bel, pl, pl - bel};
}

// A total rational-valued function on the powerset of a universe, indexed by
// canonical subset mask. values.size() must be exactly 2^|W|.
struct SetFunction {
  UniversePtr universe;
  std::vector<Rational> values;

  const Rational& at_mask(std::uint64_t mask) const { return values.at(std::size_t(mask)); }
};

inline SetFunction make_set_function(UniversePtr w, std::vector<Rational> values) {
  require_enumerable(*w, "set function");
  const std::size_t expected = std::size_t(1) << w->size();
  if (values.size() != expected)
    throw ValidationError("set function must assign a value to every subset: expected " +
                          std::to_string(expected) + " entries, got " +
                          std::to_string(values.size()));
  return SetFunction{std::move(w), std::move(values)};
}

inline void require_total(const SetFunction& f, std::string_view what) {
  require_enumerable(*f.universe, what);
  const std::size_t expected = std::size_t(1) << f.universe->size();
  if (f.values.size() != expected)
    throw ValidationError(std::string(what) + ": set function must cover every subset");
}

// Moebius inversion n(A) = sum_{B subseteq A} (-1)^{|A \ B|} f(B), computed by
// the in-place subset-lattice transform (per-coordinate differencing). The
// naive double sum lives in the oracle module and must agree bit-exactly.
inline SetFunction mobius(const SetFunction& f) {
  require_total(f, "mobius");
  SetFunction out = f;
  const std::size_t n = out.values.size();
  for (std::size_t bit = 0; (std::size_t(1) << bit) < n; ++bit)
    for (std::size_t m = 0; m < n; ++m)
      if (m & (std::size_t(1) << bit)) out.values[m] -= out.values[m ^ (std::size_t(1) << bit)];
  return out;
}

// Inverse of mobius: zeta(n)(A) = sum_{B subseteq A} n(B).
inline SetFunction zeta(const SetFunction& f) {
  require_total(f, "zeta");
  SetFunction out = f;
  const std::size_t n = out.values.size();
  for (std::size_t bit = 0; (std::size_t(1) << bit) < n; ++bit)
    for (std::size_t m = 0; m < n; ++m)
      if (m & (std::size_t(1) << bit)) out.values[m] += out.values[m ^ (std::size_t(1) << bit)];
  return out;
}

struct SuperadditivityViolation {
  std::vector<ElementSet> family;  // distinct subsets, canonical order
  Rational lhs;                    // f(union)
  Rational rhs;                    // inclusion-exclusion sum over the family
};

// Exhaustively checks f(union X_i) >= sum_{nonempty I} (-1)^{|I|+1}
// f(intersection_{i in I} X_i) over every family of up to ell_max distinct
// subsets. When several families fail, the one with the largest violation
// (rhs - lhs) is reported, ties resolved by family size then enumeration
// order; that makes the report the most informative single counterexample.
inline std::optional<SuperadditivityViolation> find_superadditivity_violation(const SetFunction& f,
                                                                              int ell_max) {
  require_total(f, "superadditivity check");
  const std::size_t n = f.values.size();
  std::optional<SuperadditivityViolation> best;
  Rational best_gap(0);

  std::vector<std::uint64_t> family;
  auto evaluate_family = [&]() {
    const std::size_t ell = family.size();
    std::uint64_t all_union = 0;
    for (std::uint64_t m : family) all_union |= m;
    Rational rhs(0);
    for (std::uint64_t picks = 1; picks < (std::uint64_t(1) << ell); ++picks) {
      std::uint64_t inter = ~std::uint64_t(0);
      for (std::size_t i = 0; i < ell; ++i)
        if (picks & (std::uint64_t(1) << i)) inter &= family[i];
      inter &= n - 1;
      const Rational term = f.at_mask(inter);
      if (std::popcount(picks) % 2 == 1)
        rhs += term;
      else
        rhs -= term;
    }
    const Rational lhs = f.at_mask(all_union);
    if (lhs < rhs) {
      const Rational gap = rhs - lhs;
      if (!best || gap > best_gap) {
        std::vector<ElementSet> sets;
        sets.reserve(ell);
        for (std::uint64_t m : family) sets.push_back(ElementSet::from_mask(f.universe, m));
        best = SuperadditivityViolation{std::move(sets), lhs, rhs};
        best_gap = gap;
      }
    }
  };

  // Families of a given size are combinations of distinct masks, ascending.
  auto recurse = [&](auto&& self, std::uint64_t next, std::size_t remaining) -> void {
    if (remaining == 0) {
      evaluate_family();
      return;
    }
    for (std::uint64_t m = next; m < n; ++m) {
      family.push_back(m);
      self(self, m + 1, remaining - 1);
      family.pop_back();
    }
  };
  for (int ell = 1; ell <= ell_max; ++ell) recurse(recurse, 0, std::size_t(ell));
  return best;
}

struct AxiomCheckReport {
  bool empty_set_is_zero = false;
  bool full_set_is_one = false;
  bool superadditive = false;
  std::optional<SuperadditivityViolation> counterexample;
  // Complete certificate, reported separately: nonnegativity of the Moebius
  // transform is equivalent to f being a belief function (given the two
  // normalization axioms), at every family size.
  bool mobius_nonnegative = false;
  std::optional<std::pair<ElementSet, Rational>> first_negative_mass;

  bool passed() const { return empty_set_is_zero && full_set_is_one && superadditive; }
};

// Checks the belief-function axioms on f up to family size ell_max. Family
// enumeration is C(2^|W|, ell), so the depth-3 check requires |W| <= 4 and
// shallower checks |W| <= 5; deeper checks are not supported.
inline AxiomCheckReport check_belief_axioms(const SetFunction& f, int ell_max) {
  require_total(f, "check_belief_axioms");
  if (ell_max < 1 || ell_max > 3)
    throw SizeCapError("axiom check depth must be between 1 and 3, got " + std::to_string(ell_max));
  const std::size_t w = f.universe->size();
  if (ell_max == 3 && w > 4)
    throw SizeCapError("axiom check at depth 3 requires |W| <= 4, got " + std::to_string(w));
  if (w > 5) throw SizeCapError("axiom check requires |W| <= 5, got " + std::to_string(w));

  AxiomCheckReport report;
  report.empty_set_is_zero = f.values.front() == Rational(0);
  report.full_set_is_one = f.values.back() == Rational(1);
  report.counterexample = find_superadditivity_violation(f, ell_max);
  report.superadditive = !report.counterexample.has_value();

  const SetFunction masses = mobius(f);
  report.mobius_nonnegative = true;
  for (std::size_t m = 0; m < masses.values.size(); ++m) {
    if (masses.values[m].is_negative()) {
      report.mobius_nonnegative = false;
      report.first_negative_mass = {ElementSet::from_mask(f.universe, m), masses.values[m]};
      break;
    }
  }
  return report;
}

}  // namespace sapprox
