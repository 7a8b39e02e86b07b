#include <doctest.h>

#include <cstdint>

#include "fixtures.hpp"
#include "sapprox/generators.hpp"
#include "sapprox/regions.hpp"
#include "sapprox/space.hpp"

using namespace sapprox;

TEST_CASE("universe construction validates labels") {
  CHECK(Universe::make({"a", "b"})->size() == 2);
  CHECK_THROWS_AS(Universe::make({}), ValidationError);
  CHECK_THROWS_AS(Universe::make({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(Universe::make({"a", ""}), ValidationError);
}

TEST_CASE("element sets are canonical bitmasks in label order") {
  const UniversePtr w = Universe::make({"a", "b", "c"});
  const ElementSet ab = ElementSet::of_labels(w, {"b", "a"});
  CHECK(ab.mask64() == 0b011);
  CHECK(ab.labels() == std::vector<std::string>{"a", "b"});
  CHECK(ab == ElementSet::from_mask(w, 0b011));
  CHECK(ab.repr() == "{a,b}");

  CHECK_THROWS_AS(ElementSet::of_labels(w, {"a", "a"}), ValidationError);
  CHECK_THROWS_AS(ElementSet::of_labels(w, {"z"}), ValidationError);
}

TEST_CASE("set operations over mismatched universes are rejected") {
  const UniversePtr w1 = Universe::make({"a", "b"});
  const UniversePtr w2 = Universe::make({"a", "c"});
  const ElementSet x = ElementSet::of_labels(w1, {"a"});
  const ElementSet y = ElementSet::of_labels(w2, {"a"});
  CHECK_THROWS_AS((void)(x | y), UniverseMismatchError);
  CHECK_THROWS_AS((void)x.subset_of(y), UniverseMismatchError);
  CHECK_THROWS_AS((void)(x == y), UniverseMismatchError);

  // Content-equal universes from different allocations are the same universe.
  const UniversePtr w1_copy = Universe::make({"a", "b"});
  CHECK(ElementSet::of_labels(w1_copy, {"a"}) == x);
}

TEST_CASE("complement, symmetric difference and union satisfy the set identities") {
  const UniversePtr w = Universe::make({"a", "b", "c", "d", "e"});
  const std::uint64_t n = 1u << w->size();
  for (std::uint64_t m = 0; m < n; ++m) {
    const ElementSet x = ElementSet::from_mask(w, m);
    CHECK(x.complement().complement() == x);
    CHECK((x ^ x) == ElementSet::empty(w));
    CHECK((x | x.complement()) == ElementSet::full(w));
  }
}

TEST_CASE("universes beyond one word still support full set algebra and regions") {
  std::vector<std::string> w_labels;
  for (int i = 0; i < 70; ++i) w_labels.push_back("w" + std::to_string(i));
  const UniversePtr w = Universe::make(w_labels);
  const ElementSet x = ElementSet::of_labels(w, {"w0", "w33", "w69"});
  CHECK(x.count() == 3);
  CHECK(x.complement().count() == 67);
  CHECK(x.complement().complement() == x);
  CHECK((x ^ x).is_empty());
  CHECK(ElementSet::of_labels(w, {"w69"}).subset_of(x));
  CHECK_THROWS_AS(x.mask64(), SizeCapError);

  // The non-enumerating operations carry no |W| cap.
  std::map<std::string, std::vector<std::string>> t;
  t["u1"] = {"w0", "w69"};
  t["u2"] = {"w33"};
  const Space g = build_space({"u1", "u2"}, w_labels, t, DeciderSpec::subseteq());
  CHECK(sapprox::lower_approx(g, x) == ElementSet::full(g.u()));
  CHECK(sapprox::upper_approx(g, x) == sapprox::lower_approx(g, x.complement()).complement());
}

TEST_CASE("build_space accepts ex1 and ex2") {
  const Space g1 = fixtures::ex1();
  CHECK(g1.u()->labels() == std::vector<std::string>{"u1", "u2"});
  CHECK(g1.image_of("u1").labels() == std::vector<std::string>{"a"});
  CHECK(g1.decider().kind() == DeciderKind::subseteq);

  const Space g2 = fixtures::ex2();
  CHECK(g2.decider().kind() == DeciderKind::card_threshold);
  CHECK(g2.decider().k() == 2);
}

TEST_CASE("build_space rejects malformed input") {
  CHECK_THROWS_WITH_AS(build_space({"u1"}, {"a"}, {}, DeciderSpec::subseteq()),
                       "missing T entry for 'u1'", ValidationError);
  CHECK_THROWS_AS(build_space({"u1", "u1"}, {"a"}, {{"u1", {"a"}}}, DeciderSpec::subseteq()),
                  ValidationError);
  CHECK_THROWS_AS(build_space({"u1"}, {"a"}, {{"u1", {"z"}}}, DeciderSpec::subseteq()),
                  ValidationError);
  CHECK_THROWS_AS(build_space({"u1"}, {"a"}, {{"u1", {"a"}}, {"u9", {"a"}}},
                              DeciderSpec::subseteq()),
                  ValidationError);
  CHECK_THROWS_AS(build_space({"u1"}, {"a"}, {{"u1", {"a"}}}, DeciderSpec::card_threshold(0)),
                  ValidationError);
}

TEST_CASE("table deciders reject comparable antichain entries") {
  DeciderSpec spec = DeciderSpec::table({{{"a"}, {{"a"}, {"a", "b"}}}});
  CHECK_THROWS_AS(build_space({"u1"}, {"a", "b"}, {{"u1", {"a"}}}, spec), ValidationError);

  DeciderSpec dup = DeciderSpec::table({{{"a"}, {{"b"}}}, {{"a"}, {{"b"}}}});
  CHECK_THROWS_AS(build_space({"u1"}, {"a", "b"}, {{"u1", {"a"}}}, dup), ValidationError);

  // Incomparable entries are fine.
  DeciderSpec ok = DeciderSpec::table({{{"a"}, {{"a"}, {"b", "c"}}}});
  CHECK_NOTHROW(build_space({"u1"}, {"a", "b", "c"}, {{"u1", {"a"}}}, ok));
}

TEST_CASE("decider evaluation matches the four definitions") {
  const UniversePtr w = Universe::make({"a", "b", "c"});
  const auto set = [&](std::uint64_t m) { return ElementSet::from_mask(w, m); };

  const Decider incl = Decider::subseteq(w);
  CHECK(incl.eval(ElementSet::of_labels(w, {"a"}), ElementSet::of_labels(w, {"a", "b"})));
  CHECK_FALSE(incl.eval(ElementSet::of_labels(w, {"a", "b"}), ElementSet::of_labels(w, {"b"})));

  const Decider inter = Decider::intersects(w);
  CHECK(inter.eval(set(0b001), set(0b011)));
  CHECK_FALSE(inter.eval(set(0b001), set(0b110)));
  CHECK_FALSE(inter.eval(set(0), set(0b111)));

  const Decider card = Decider::card_threshold(w, 2);
  CHECK(card.eval(ElementSet::of_labels(w, {"a"}), ElementSet::of_labels(w, {"b", "c"})));
  CHECK_FALSE(card.eval(set(0b111), set(0b100)));

  Decider::Table table;
  table.emplace(set(0b001), std::vector<ElementSet>{set(0b010), set(0b101)});
  const Decider tab = Decider::table(w, std::move(table));
  CHECK(tab.eval(set(0b001), set(0b010)));
  CHECK(tab.eval(set(0b001), set(0b111)));
  CHECK_FALSE(tab.eval(set(0b001), set(0b001)));
  CHECK_FALSE(tab.eval(set(0b010), set(0b111)));  // unlisted A rejects everything
}

TEST_CASE("cardinality-threshold acceptance agrees with exhaustive counting") {
  const UniversePtr w = Universe::make({"a", "b", "c"});
  const Decider card = Decider::card_threshold(w, 2);
  const ElementSet a = ElementSet::of_labels(w, {"a"});
  for (std::uint64_t m = 0; m < 8; ++m) {
    const ElementSet x = ElementSet::from_mask(w, m);
    CHECK(card.eval(a, x) == (x.count() >= 2));
  }
}

TEST_CASE("intersects acceptance is upward closed, exhaustively") {
  const UniversePtr w = Universe::make({"a", "b", "c", "d", "e"});
  const std::uint64_t n = 1u << w->size();
  const Decider inter = Decider::intersects(w);
  for (std::uint64_t am = 0; am < n; ++am) {
    const ElementSet a = ElementSet::from_mask(w, am);
    for (std::uint64_t xm = 0; xm < n; ++xm)
      for (std::uint64_t ym = 0; ym < n; ++ym) {
        if ((xm & ~ym) != 0) continue;  // X not a subset of Y
        const bool on_x = inter.eval(a, ElementSet::from_mask(w, xm));
        const bool on_y = inter.eval(a, ElementSet::from_mask(w, ym));
        if (on_x) CHECK(on_y);
      }
  }
}

TEST_CASE("table acceptance is upward closed on random deciders") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Space g = random_space(seed, 4, 5, DeciderKind::table);
    const std::uint64_t n = 1u << g.w()->size();
    for (const auto& [a, antichain] : g.decider().entries()) {
      (void)antichain;
      for (std::uint64_t xm = 0; xm < n; ++xm) {
        if (!g.decider().eval(a, ElementSet::from_mask(g.w(), xm))) continue;
        for (std::uint64_t ym = xm; ym < n; ++ym)
          if ((xm & ~ym) == 0) CHECK(g.decider().eval(a, ElementSet::from_mask(g.w(), ym)));
      }
    }
  }
}
