#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sapprox/decider.hpp"
#include "sapprox/universe.hpp"

namespace sapprox {

// The quadruple (U, W, T, S): two universes, a knowledge mapping assigning a
// subset of W to every element of U, and a decider over W. Immutable after
// construction; every operation on it is a pure function.
class Space {
 public:
  Space(UniversePtr u, UniversePtr w, std::vector<ElementSet> images, Decider decider)
      : u_(std::move(u)), w_(std::move(w)), images_(std::move(images)), decider_(std::move(decider)) {
    if (images_.size() != u_->size())
      throw ValidationError("knowledge mapping must cover every element of U");
    for (const auto& img : images_) require_same_universe(img.universe(), w_);
    require_same_universe(decider_.universe(), w_);
  }

  const UniversePtr& u() const { return u_; }
  const UniversePtr& w() const { return w_; }
  const std::vector<ElementSet>& images() const { return images_; }
  const ElementSet& image(std::size_t i) const { return images_.at(i); }
  const ElementSet& image_of(const std::string& label) const {
    return images_.at(u_->index_of(label));
  }
  const Decider& decider() const { return decider_; }

 private:
  UniversePtr u_;
  UniversePtr w_;
  std::vector<ElementSet> images_;
  Decider decider_;
};

inline Space build_space(const std::vector<std::string>& u_labels,
                         const std::vector<std::string>& w_labels,
                         const std::map<std::string, std::vector<std::string>>& t_map,
                         const DeciderSpec& spec) {
  UniversePtr u = Universe::make(u_labels);
  UniversePtr w = Universe::make(w_labels);
  for (const auto& [label, value] : t_map) {
    (void)value;
    if (!u->has(label)) throw ValidationError("T entry for unknown element '" + label + "'");
  }
  std::vector<ElementSet> images;
  images.reserve(u->size());
  for (const auto& label : u->labels()) {
    const auto it = t_map.find(label);
    if (it == t_map.end()) throw ValidationError("missing T entry for '" + label + "'");
    images.push_back(ElementSet::of_labels(w, it->second));
  }
  Decider decider = bind_decider(spec, w);
  return Space(std::move(u), std::move(w), std::move(images), std::move(decider));
}

}  // namespace sapprox
