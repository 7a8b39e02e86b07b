#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sapprox/universe.hpp"

namespace sapprox {

enum class DeciderKind { subseteq, intersects, card_threshold, table };

inline std::string to_string(DeciderKind k) {
  switch (k) {
    case DeciderKind::subseteq: return "subseteq";
    case DeciderKind::intersects: return "intersects";
    case DeciderKind::card_threshold: return "card_threshold";
    case DeciderKind::table: return "table";
  }
  throw Error("unreachable decider kind");
}

inline DeciderKind decider_kind_from_string(const std::string& s) {
  if (s == "subseteq") return DeciderKind::subseteq;
  if (s == "intersects") return DeciderKind::intersects;
  if (s == "card_threshold") return DeciderKind::card_threshold;
  if (s == "table") return DeciderKind::table;
  throw ValidationError("unknown decider kind '" + s + "'");
}

// No two members of an antichain may be comparable; duplicates are comparable
// too. Rejecting (rather than minimizing) keeps malformed input visible.
inline void validate_antichain(const std::vector<ElementSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].subset_of(sets[j]) || sets[j].subset_of(sets[i]))
        throw ValidationError("comparable sets " + sets[i].repr() + " and " + sets[j].repr() +
                              " in antichain");
}

// Label-level description of a decider, as it appears in input documents.
// bind_decider resolves it against a concrete universe.
struct DeciderSpec {
  struct TableEntry {
    std::vector<std::string> a;
    std::vector<std::vector<std::string>> minimal;
  };

  DeciderKind kind = DeciderKind::subseteq;
  std::size_t k = 0;
  std::vector<TableEntry> entries;

  static DeciderSpec subseteq() { return {DeciderKind::subseteq, 0, {}}; }
  static DeciderSpec intersects() { return {DeciderKind::intersects, 0, {}}; }
  static DeciderSpec card_threshold(std::size_t k) { return {DeciderKind::card_threshold, k, {}}; }
  static DeciderSpec table(std::vector<TableEntry> entries) {
    return {DeciderKind::table, 0, std::move(entries)};
  }
};

// Total boolean map on P(W) x P(W). The four built-in kinds are all partial
// monotone: acceptance of the second argument is upward closed. For the table
// kind this is forced by the representation (accept X iff some stored minimal
// set for A is contained in X; unlisted A reject everything).
class Decider {
 public:
  using Table = std::map<ElementSet, std::vector<ElementSet>, SetNumericLess>;

  static Decider subseteq(UniversePtr w) { return Decider(DeciderKind::subseteq, std::move(w)); }
  static Decider intersects(UniversePtr w) { return Decider(DeciderKind::intersects, std::move(w)); }

  static Decider card_threshold(UniversePtr w, std::size_t k) {
    if (k < 1) throw ValidationError("cardinality threshold must be a positive integer");
    Decider d(DeciderKind::card_threshold, std::move(w));
    d.k_ = k;
    return d;
  }

  static Decider table(UniversePtr w, Table entries) {
    Decider d(DeciderKind::table, std::move(w));
    for (auto& [a, antichain] : entries) {
      require_same_universe(a.universe(), d.universe_);
      for (const auto& m : antichain) require_same_universe(m.universe(), d.universe_);
      validate_antichain(antichain);
    }
    d.table_ = std::move(entries);
    for (auto& [a, antichain] : d.table_)
      std::sort(antichain.begin(), antichain.end(), ElementSet::numeric_less);
    return d;
  }

  DeciderKind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  const Table& entries() const { return table_; }
  const UniversePtr& universe() const { return universe_; }

  // All representable deciders are partial monotone; see the class note.
  bool partial_monotone_by_construction() const { return true; }

  bool eval(const ElementSet& a, const ElementSet& x) const {
    require_same_universe(a.universe(), universe_);
    require_same_universe(x.universe(), universe_);
    switch (kind_) {
      case DeciderKind::subseteq: return a.subset_of(x);
      case DeciderKind::intersects: return a.intersects(x);
      case DeciderKind::card_threshold: return x.count() >= k_;
      case DeciderKind::table: {
        const auto it = table_.find(a);
        if (it == table_.end()) return false;
        for (const auto& minimal : it->second)
          if (minimal.subset_of(x)) return true;
        return false;
      }
    }
    throw Error("unreachable decider kind");
  }

 private:
  Decider(DeciderKind kind, UniversePtr w) : kind_(kind), universe_(std::move(w)) {
    if (!universe_) throw ValidationError("decider requires a universe");
  }

  DeciderKind kind_;
  UniversePtr universe_;
  std::size_t k_ = 0;
  Table table_;
};

inline Decider bind_decider(const DeciderSpec& spec, UniversePtr w) {
  switch (spec.kind) {
    case DeciderKind::subseteq: return Decider::subseteq(std::move(w));
    case DeciderKind::intersects: return Decider::intersects(std::move(w));
    case DeciderKind::card_threshold: return Decider::card_threshold(std::move(w), spec.k);
    case DeciderKind::table: {
      Decider::Table table;
      for (const auto& entry : spec.entries) {
        ElementSet a = ElementSet::of_labels(w, entry.a);
        std::vector<ElementSet> antichain;
        antichain.reserve(entry.minimal.size());
        for (const auto& labels : entry.minimal)
          antichain.push_back(ElementSet::of_labels(w, labels));
        if (!table.emplace(std::move(a), std::move(antichain)).second)
          throw ValidationError("duplicate table entry for " +
                                ElementSet::of_labels(w, entry.a).repr());
      }
      return Decider::table(std::move(w), std::move(table));
    }
  }
  throw Error("unreachable decider kind");
}

inline bool eval_decider(const Decider& s, const ElementSet& a, const ElementSet& x) {
  return s.eval(a, x);
}

}  // namespace sapprox
