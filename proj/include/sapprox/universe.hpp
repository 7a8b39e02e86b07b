#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sapprox/errors.hpp"

namespace sapprox {

// Operations that enumerate the powerset of a universe refuse anything larger
// than this; the 2^n blow-up is intrinsic, so we fail loudly instead.
inline constexpr std::size_t max_enumerable_universe = 20;

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

// An ordered finite set of distinct element names. The position of a label is
// fixed at construction and defines its bit in every ElementSet encoding.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("universe must contain at least one element");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw ValidationError("empty label in universe");
      if (!index_.emplace(labels_[i], i).second)
        throw ValidationError("duplicate label '" + labels_[i] + "' in universe");
    }
  }

  static UniversePtr make(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool has(std::string_view label) const { return index_.find(label) != index_.end(); }

  std::size_t index_of(std::string_view label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw ValidationError("unknown label '" + std::string(label) + "'");
    return it->second;
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (!same_universe(a, b)) throw UniverseMismatchError();
}

inline void require_enumerable(const Universe& u, std::string_view what) {
  if (u.size() > max_enumerable_universe)
    throw SizeCapError(std::string(what) + ": universe of size " + std::to_string(u.size()) +
                       " exceeds the powerset-enumeration cap of " +
                       std::to_string(max_enumerable_universe));
}

// A subset of a universe, canonically encoded as a bitmask over the
// universe's label order. All binary operations require both operands to
// live over the same universe; complements are relative to that universe.
class ElementSet {
 public:
  static ElementSet empty(UniversePtr u) { return ElementSet(std::move(u)); }

  static ElementSet full(UniversePtr u) {
    ElementSet s(std::move(u));
    for (auto& block : s.bits_) block = ~std::uint64_t(0);
    s.trim();
    return s;
  }

  static ElementSet of_labels(UniversePtr u, const std::vector<std::string>& labels) {
    ElementSet s(std::move(u));
    for (const auto& label : labels) {
      const std::size_t i = s.universe_->index_of(label);
      if (s.contains(i)) throw ValidationError("duplicate label '" + label + "' in set");
      s.set_bit(i);
    }
    return s;
  }

  static ElementSet of_indices(UniversePtr u, const std::vector<std::size_t>& indices) {
    ElementSet s(std::move(u));
    for (std::size_t i : indices) {
      if (i >= s.universe_->size()) throw ValidationError("element index out of range");
      s.set_bit(i);
    }
    return s;
  }

  // Mask-based access is only available for universes that fit in one word;
  // the enumeration sweeps all operate at or below max_enumerable_universe.
  static ElementSet from_mask(UniversePtr u, std::uint64_t mask) {
    ElementSet s(std::move(u));
    const std::size_t n = s.universe_->size();
    if (n > 64 || (n < 64 && (mask >> n) != 0))
      throw ValidationError("mask does not fit the universe");
    s.bits_[0] = mask;
    return s;
  }

  std::uint64_t mask64() const {
    if (universe_->size() > 64) throw SizeCapError("universe too large for a 64-bit mask");
    return bits_[0];
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_->size(); }

  bool contains(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  bool is_empty() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : bits_) c += std::size_t(std::popcount(b));
    return c;
  }

  ElementSet with(std::size_t i) const {
    ElementSet s = *this;
    s.set_bit(i);
    return s;
  }
  ElementSet without(std::size_t i) const {
    ElementSet s = *this;
    s.bits_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    return s;
  }

  ElementSet operator|(const ElementSet& o) const {
    return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; });
  }
  ElementSet operator&(const ElementSet& o) const {
    return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  }
  // Symmetric difference.
  ElementSet operator^(const ElementSet& o) const {
    return zip(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
  }
  ElementSet minus(const ElementSet& o) const {
    return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
  }
  ElementSet complement() const {
    ElementSet s = *this;
    for (auto& b : s.bits_) b = ~b;
    s.trim();
    return s;
  }

  bool subset_of(const ElementSet& o) const {
    require_same_universe(universe_, o.universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }
  bool proper_subset_of(const ElementSet& o) const { return subset_of(o) && *this != o; }
  bool intersects(const ElementSet& o) const {
    require_same_universe(universe_, o.universe_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & o.bits_[i]) return true;
    return false;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    require_same_universe(a.universe_, b.universe_);
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  // Total order: the bitmask read as an integer, ascending. This is the
  // canonical enumeration and serialization order everywhere.
  static bool numeric_less(const ElementSet& a, const ElementSet& b) {
    require_same_universe(a.universe_, b.universe_);
    for (std::size_t i = a.bits_.size(); i-- > 0;)
      if (a.bits_[i] != b.bits_[i]) return a.bits_[i] < b.bits_[i];
    return false;
  }

  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t blk = 0; blk < bits_.size(); ++blk) {
      std::uint64_t word = bits_[blk];
      while (word) {
        f(blk * 64 + std::size_t(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_index([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(count());
    for_each_index([&](std::size_t i) { out.push_back(universe_->label(i)); });
    return out;
  }

  // "{a,b}" rendering for diagnostics.
  std::string repr() const {
    std::string out = "{";
    bool first = true;
    for_each_index([&](std::size_t i) {
      if (!first) out += ',';
      out += universe_->label(i);
      first = false;
    });
    out += '}';
    return out;
  }

 private:
  explicit ElementSet(UniversePtr u)
      : universe_(std::move(u)), bits_((universe_->size() + 63) / 64, 0) {}

  void set_bit(std::size_t i) { bits_[i / 64] |= std::uint64_t(1) << (i % 64); }

  void trim() {
    const std::size_t n = universe_->size();
    if (n % 64) bits_.back() &= (std::uint64_t(1) << (n % 64)) - 1;
  }

  template <class Op>
  ElementSet zip(const ElementSet& o, Op op) const {
    require_same_universe(universe_, o.universe_);
    ElementSet s = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = op(bits_[i], o.bits_[i]);
    return s;
  }

  UniversePtr universe_;
  std::vector<std::uint64_t> bits_;
};

struct SetNumericLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return ElementSet::numeric_less(a, b);
  }
};

}  // namespace sapprox
