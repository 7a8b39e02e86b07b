#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sapprox/space.hpp"

namespace sapprox {

enum class MonotoneScope { space, decider };

struct MonotoneWitness {
  ElementSet a;
  ElementSet x;
  ElementSet y;  // x with one extra element, accepted -> rejected
};

struct MonotoneReport {
  bool holds = true;
  std::optional<MonotoneWitness> witness;
};

namespace detail {

// Single-element steps certify full upward closure: f(X) <= f(X u {b}) for
// all X and b implies f(X) <= f(Y) for all X subseteq Y. Returns the first
// violating (X, X u {b}) in ascending (mask, bit) order.
template <class Accepts>
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_upward_violation(std::size_t w,
                                                                             Accepts&& accepts) {
  const std::uint64_t limit = std::uint64_t(1) << w;
  for (std::uint64_t x = 0; x < limit; ++x) {
    if (!accepts(x)) continue;
    for (std::size_t b = 0; b < w; ++b) {
      const std::uint64_t bit = std::uint64_t(1) << b;
      if (x & bit) continue;
      if (!accepts(x | bit)) return std::make_pair(x, x | bit);
    }
  }
  return std::nullopt;
}

// Masks of equal popcount in ascending order (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace detail

// Sweeps X -> S(A, X) for upward closure. scope=space restricts A to the
// image of T (all the theory here only ever evaluates S(T(x), .)); scope=
// decider covers every A the decider can distinguish: all A for subseteq and
// intersects, the stored keys for table deciders (unlisted A reject
// everything, which is vacuously monotone), and a single representative for
// card_threshold whose verdict ignores A entirely.
inline MonotoneReport check_partial_monotone(const Space& g, MonotoneScope scope) {
  require_enumerable(*g.w(), "check_partial_monotone");
  const std::size_t w = g.w()->size();

  std::vector<ElementSet> candidates;
  if (scope == MonotoneScope::space) {
    std::set<ElementSet, SetNumericLess> distinct(g.images().begin(), g.images().end());
    candidates.assign(distinct.begin(), distinct.end());
  } else {
    switch (g.decider().kind()) {
      case DeciderKind::subseteq:
      case DeciderKind::intersects: {
        const std::uint64_t limit = std::uint64_t(1) << w;
        for (std::uint64_t m = 0; m < limit; ++m)
          candidates.push_back(ElementSet::from_mask(g.w(), m));
        break;
      }
      case DeciderKind::card_threshold:
        candidates.push_back(ElementSet::empty(g.w()));
        break;
      case DeciderKind::table:
        for (const auto& [a, antichain] : g.decider().entries()) {
          (void)antichain;
          candidates.push_back(a);
        }
        break;
    }
  }

  for (const auto& a : candidates) {
    const auto violation = detail::find_upward_violation(w, [&](std::uint64_t m) {
      return g.decider().eval(a, ElementSet::from_mask(g.w(), m));
    });
    if (violation)
      return MonotoneReport{false,
                            MonotoneWitness{a, ElementSet::from_mask(g.w(), violation->first),
                                            ElementSet::from_mask(g.w(), violation->second)}};
  }
  return MonotoneReport{true, std::nullopt};
}

// The antichain of minimal accepted sets for one element: ascending
// cardinality sweep with dominated-candidate pruning. Result is sorted in
// canonical (numeric mask) order.
inline std::vector<ElementSet> inflection_points(const Space& g, std::size_t x_index) {
  require_enumerable(*g.w(), "inflection_points");
  if (x_index >= g.u()->size()) throw ValidationError("element index out of range");
  if (!g.decider().partial_monotone_by_construction())
    throw ValidationError("inflection sets are only defined for partial monotone spaces");

  const std::size_t w = g.w()->size();
  const std::uint64_t limit = std::uint64_t(1) << w;
  const ElementSet& a = g.image(x_index);

  std::vector<std::uint64_t> minimal;
  for (std::size_t card = 0; card <= w; ++card) {
    std::uint64_t m = card == 0 ? 0 : (std::uint64_t(1) << card) - 1;
    while (m < limit) {
      bool dominated = false;
      for (std::uint64_t found : minimal)
        if ((found & ~m) == 0) {
          dominated = true;
          break;
        }
      if (!dominated && g.decider().eval(a, ElementSet::from_mask(g.w(), m))) minimal.push_back(m);
      if (card == 0) break;
      m = detail::next_same_popcount(m);
    }
  }

  std::sort(minimal.begin(), minimal.end());
  std::vector<ElementSet> out;
  out.reserve(minimal.size());
  for (std::uint64_t m : minimal) out.push_back(ElementSet::from_mask(g.w(), m));
  return out;
}

inline std::vector<ElementSet> inflection_points(const Space& g, const std::string& label) {
  return inflection_points(g, g.u()->index_of(label));
}

// Per-element antichains for the whole space, indexed like U.
inline std::vector<std::vector<ElementSet>> inflection_set(const Space& g) {
  std::vector<std::vector<ElementSet>> out;
  out.reserve(g.u()->size());
  for (std::size_t i = 0; i < g.u()->size(); ++i) out.push_back(inflection_points(g, i));
  return out;
}

// An element is trivial iff its inflection antichain is empty or {emptyset}.
// Under partial monotonicity that is equivalent to S(T(x), W) = 0 resp.
// S(T(x), emptyset) = 1, which is what gets evaluated here.
inline ElementSet trivial_elements(const Space& g) {
  require_enumerable(*g.w(), "trivial_elements");
  if (!g.decider().partial_monotone_by_construction())
    throw ValidationError("triviality is only defined for partial monotone spaces");
  const ElementSet none = ElementSet::empty(g.w());
  const ElementSet all = ElementSet::full(g.w());
  ElementSet out = ElementSet::empty(g.u());
  for (std::size_t i = 0; i < g.u()->size(); ++i) {
    const bool accepts_empty = g.decider().eval(g.image(i), none);
    const bool accepts_full = g.decider().eval(g.image(i), all);
    if (accepts_empty || !accepts_full) out = out.with(i);
  }
  return out;
}

// Restricts U to its non-trivial elements; W, the restricted T and the
// decider are unchanged. Idempotent, and the output is irreducible. Note that
// quality values are not preserved: the |U| denominator changes.
inline Space reduce(const Space& g) {
  const ElementSet trivial = trivial_elements(g);
  if (trivial.is_empty()) return g;
  if (trivial.count() == g.u()->size())
    throw ValidationError("all elements are trivial; reduction would empty U");

  std::vector<std::string> labels;
  std::vector<ElementSet> images;
  for (std::size_t i = 0; i < g.u()->size(); ++i) {
    if (trivial.contains(i)) continue;
    labels.push_back(g.u()->label(i));
    images.push_back(g.image(i));
  }
  return Space(Universe::make(std::move(labels)), g.w(), std::move(images), g.decider());
}

}  // namespace sapprox
