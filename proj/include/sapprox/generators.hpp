#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sapprox/evidence.hpp"
#include "sapprox/space.hpp"

namespace sapprox {

inline constexpr std::size_t max_random_u = 8;
inline constexpr std::size_t max_random_w = 5;
inline constexpr std::int64_t max_random_denominator = 36;

// Self-contained PRNG (splitmix64) so that generated instances are
// byte-identical across platforms and standard libraries.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Derives an independent stream for subtask `tag` of the same seed.
  SplitMix64 fork(std::uint64_t tag) { return SplitMix64(next() ^ (tag * 0xd1342543de82ef95ULL)); }
};

namespace detail {

inline std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return labels;
}

inline std::vector<std::string> numbered_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

// Keeps only the minimal elements, deduplicated: the antichain of the family.
inline std::vector<std::uint64_t> minimize_family(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t candidate : sets) {
    bool dominated = false;
    for (std::uint64_t kept : minimal)
      if ((kept & ~candidate) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(candidate);
  }
  return minimal;
}

}  // namespace detail

// Deterministic in the seed. Every generated space is partial monotone and
// irreducible: T images are nonempty for subseteq/intersects deciders,
// cardinality thresholds stay within |W|, and table deciders attach to each
// T image a nonempty antichain of nonempty sets (1-3 random sets reduced to
// their minimal elements).
inline Space random_space(std::uint64_t seed, std::size_t u_size, std::size_t w_size,
                          DeciderKind kind) {
  if (u_size < 1 || u_size > max_random_u)
    throw SizeCapError("random_space u_size must be in [1, " + std::to_string(max_random_u) + "]");
  if (w_size < 1 || w_size > max_random_w)
    throw SizeCapError("random_space w_size must be in [1, " + std::to_string(max_random_w) + "]");

  SplitMix64 rng(seed);
  UniversePtr u = Universe::make(detail::numbered_labels("u", u_size));
  UniversePtr w = Universe::make(detail::letter_labels(w_size));
  const std::uint64_t full = (std::uint64_t(1) << w_size) - 1;

  std::vector<ElementSet> images;
  images.reserve(u_size);
  for (std::size_t i = 0; i < u_size; ++i) {
    std::uint64_t mask;
    if (kind == DeciderKind::subseteq || kind == DeciderKind::intersects)
      mask = 1 + rng.below(full);  // nonempty, so no element is trivial
    else
      mask = rng.below(full + 1);
    images.push_back(ElementSet::from_mask(w, mask));
  }

  Decider decider = Decider::subseteq(w);
  switch (kind) {
    case DeciderKind::subseteq: break;
    case DeciderKind::intersects:
      decider = Decider::intersects(w);
      break;
    case DeciderKind::card_threshold:
      decider = Decider::card_threshold(w, 1 + std::size_t(rng.below(w_size)));
      break;
    case DeciderKind::table: {
      std::set<ElementSet, SetNumericLess> distinct(images.begin(), images.end());
      Decider::Table table;
      for (const auto& a : distinct) {
        const std::size_t n_sets = 1 + std::size_t(rng.below(3));
        std::vector<std::uint64_t> family;
        for (std::size_t i = 0; i < n_sets; ++i) family.push_back(1 + rng.below(full));
        std::vector<ElementSet> antichain;
        for (std::uint64_t m : detail::minimize_family(std::move(family)))
          antichain.push_back(ElementSet::from_mask(w, m));
        table.emplace(a, std::move(antichain));
      }
      decider = Decider::table(w, std::move(table));
      break;
    }
  }
  return Space(std::move(u), std::move(w), std::move(images), std::move(decider));
}

// Deterministic in the seed: 1-4 distinct nonempty focal sets over the given
// universe, with positive masses over one common denominator summing to 1.
inline BeliefStructure random_belief_over(std::uint64_t seed, UniversePtr w,
                                          std::int64_t max_denominator) {
  if (w->size() > max_random_u)
    throw SizeCapError("random belief universe must have at most " + std::to_string(max_random_u) +
                       " elements");
  if (max_denominator < 1 || max_denominator > max_random_denominator)
    throw SizeCapError("max_denominator must be in [1, " +
                       std::to_string(max_random_denominator) + "]");

  SplitMix64 rng(seed);
  const std::uint64_t full = (std::uint64_t(1) << w->size()) - 1;
  std::size_t n_focal = 1 + std::size_t(rng.below(4));
  n_focal = std::min(n_focal, std::size_t(full));
  n_focal = std::min(n_focal, std::size_t(max_denominator));

  std::vector<std::uint64_t> candidates;
  candidates.reserve(std::size_t(full));
  for (std::uint64_t m = 1; m <= full; ++m) candidates.push_back(m);
  for (std::size_t i = 0; i < n_focal; ++i) {
    const std::size_t j = i + std::size_t(rng.below(candidates.size() - i));
    std::swap(candidates[i], candidates[j]);
  }
  std::vector<std::uint64_t> focal(candidates.begin(), candidates.begin() + long(n_focal));
  std::sort(focal.begin(), focal.end());

  const std::int64_t d =
      std::int64_t(n_focal) + std::int64_t(rng.below(std::uint64_t(max_denominator - std::int64_t(n_focal)) + 1));
  // Random composition of d into n_focal positive parts: distinct cut points.
  std::vector<std::int64_t> cuts;
  std::vector<std::int64_t> positions;
  positions.reserve(std::size_t(d - 1));
  for (std::int64_t p = 1; p < d; ++p) positions.push_back(p);
  for (std::size_t i = 0; i + 1 < n_focal; ++i) {
    const std::size_t j = i + std::size_t(rng.below(positions.size() - i));
    std::swap(positions[i], positions[j]);
    cuts.push_back(positions[i]);
  }
  cuts.push_back(0);
  cuts.push_back(d);
  std::sort(cuts.begin(), cuts.end());

  std::vector<std::pair<ElementSet, Rational>> entries;
  entries.reserve(n_focal);
  for (std::size_t i = 0; i < n_focal; ++i)
    entries.emplace_back(ElementSet::from_mask(w, focal[i]), Rational(cuts[i + 1] - cuts[i], d));
  return BeliefStructure::build(std::move(w), entries);
}

inline BeliefStructure random_belief(std::uint64_t seed, std::size_t w_size,
                                     std::int64_t max_denominator) {
  if (w_size < 1 || w_size > max_random_w)
    throw SizeCapError("random_belief w_size must be in [1, " + std::to_string(max_random_w) + "]");
  return random_belief_over(seed, Universe::make(detail::letter_labels(w_size)), max_denominator);
}

}  // namespace sapprox
