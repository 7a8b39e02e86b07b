#include <doctest.h>

#include <bit>
#include <cstdint>

#include "fixtures.hpp"
#include "sapprox/generators.hpp"
#include "sapprox/monotone.hpp"
#include "sapprox/naive.hpp"
#include "sapprox/regions.hpp"

using namespace sapprox;

namespace {

std::vector<ElementSet> wsets(const Space& g, const std::vector<std::uint64_t>& masks) {
  std::vector<ElementSet> out;
  for (std::uint64_t m : masks) out.push_back(ElementSet::from_mask(g.w(), m));
  return out;
}

}  // namespace

TEST_CASE("built-in deciders pass the monotonicity sweep in both scopes") {
  CHECK(check_partial_monotone(fixtures::ex1(), MonotoneScope::space).holds);
  CHECK(check_partial_monotone(fixtures::ex1(), MonotoneScope::decider).holds);
  CHECK(check_partial_monotone(fixtures::ex2(), MonotoneScope::space).holds);
  CHECK(check_partial_monotone(fixtures::ex2(), MonotoneScope::decider).holds);

  const Space table = build_space({"u1"}, {"a", "b"}, {{"u1", {"a"}}},
                                  DeciderSpec::table({{{"a"}, {{"a"}}}}));
  CHECK(check_partial_monotone(table, MonotoneScope::space).holds);
  CHECK(check_partial_monotone(table, MonotoneScope::decider).holds);

  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (const DeciderKind kind : {DeciderKind::subseteq, DeciderKind::intersects,
                                   DeciderKind::card_threshold, DeciderKind::table}) {
      const Space g = random_space(seed, 4, 3, kind);
      CHECK(check_partial_monotone(g, MonotoneScope::space).holds);
      CHECK(check_partial_monotone(g, MonotoneScope::decider).holds);
    }
}

TEST_CASE("the sweep itself finds minimal witnesses on a non-monotone predicate") {
  // f accepts exactly {a}: adding b breaks acceptance.
  const auto violation =
      detail::find_upward_violation(3, [](std::uint64_t m) { return m == 0b001; });
  REQUIRE(violation.has_value());
  CHECK(violation->first == 0b001);
  CHECK(violation->second == 0b011);
  CHECK(std::popcount(violation->second ^ violation->first) == 1);

  CHECK_FALSE(detail::find_upward_violation(4, [](std::uint64_t m) {
                return std::popcount(m) >= 2;
              }).has_value());
}

TEST_CASE("inflection points of the fixtures") {
  const Space g1 = fixtures::ex1();
  CHECK(inflection_points(g1, "u1") == wsets(g1, {0b01}));
  CHECK(inflection_points(g1, "u2") == wsets(g1, {0b11}));

  const Space g2 = fixtures::ex2();
  CHECK(inflection_points(g2, "v") == wsets(g2, {0b011, 0b101, 0b110}));
}

TEST_CASE("inflection points match the proper-subset oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (const DeciderKind kind : {DeciderKind::subseteq, DeciderKind::intersects,
                                   DeciderKind::card_threshold, DeciderKind::table}) {
      const Space g = random_space(seed * 13 + 1, 5, 4, kind);
      for (std::size_t i = 0; i < g.u()->size(); ++i)
        CHECK(inflection_points(g, i) == naive::inflection(g, i));
    }
}

TEST_CASE("acceptance is reconstructible from the inflection antichain") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (const DeciderKind kind : {DeciderKind::subseteq, DeciderKind::intersects,
                                   DeciderKind::card_threshold, DeciderKind::table}) {
      const Space g = random_space(seed * 17 + 3, 4, 5, kind);
      const std::uint64_t n = std::uint64_t(1) << g.w()->size();
      for (std::size_t i = 0; i < g.u()->size(); ++i) {
        const auto antichain = inflection_points(g, i);
        for (std::uint64_t m = 0; m < n; ++m) {
          const ElementSet x = ElementSet::from_mask(g.w(), m);
          bool covered = false;
          for (const auto& minimal : antichain)
            if (minimal.subset_of(x)) {
              covered = true;
              break;
            }
          CHECK(g.decider().eval(g.image(i), x) == covered);
        }
      }
    }
}

TEST_CASE("trivial elements of the fixtures") {
  CHECK(trivial_elements(fixtures::ex1()).is_empty());
  CHECK(trivial_elements(fixtures::ex2()).is_empty());

  const Space g = fixtures::ex1_with_trivial();
  CHECK(trivial_elements(g) == ElementSet::of_labels(g.u(), {"u3"}));
  // S({}, {}) = 1 under inclusion, so u3's antichain is exactly {{}}.
  CHECK(inflection_points(g, "u3") == wsets(g, {0}));
}

TEST_CASE("triviality shortcut agrees with the antichain classification") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (const DeciderKind kind : {DeciderKind::subseteq, DeciderKind::intersects,
                                   DeciderKind::card_threshold, DeciderKind::table}) {
      const Space g = random_space(seed * 7 + 2, 6, 4, kind);
      const ElementSet trivial = trivial_elements(g);
      for (std::size_t i = 0; i < g.u()->size(); ++i) {
        const auto ip = inflection_points(g, i);
        const bool by_definition =
            ip.empty() || (ip.size() == 1 && ip.front() == ElementSet::empty(g.w()));
        CHECK(trivial.contains(i) == by_definition);
      }
    }
}

TEST_CASE("reduce removes exactly the trivial elements") {
  const Space g1 = fixtures::ex1();
  const Space reduced1 = reduce(g1);
  CHECK(reduced1.u()->labels() == g1.u()->labels());

  const Space g = fixtures::ex1_with_trivial();
  const Space reduced = reduce(g);
  CHECK(reduced.u()->labels() == std::vector<std::string>{"u1", "u2"});
  CHECK(reduced.image_of("u1") == g.image_of("u1"));
  CHECK(reduced.image_of("u2") == g.image_of("u2"));
  CHECK(trivial_elements(reduced).is_empty());

  // Idempotence.
  CHECK(reduce(reduced).u()->labels() == reduced.u()->labels());
}

TEST_CASE("reduce refuses to empty U") {
  const Space g = build_space({"u1"}, {"a"}, {{"u1", {}}}, DeciderSpec::subseteq());
  CHECK_THROWS_AS(reduce(g), ValidationError);
}

TEST_CASE("approximations survive reduction on the surviving elements") {
  const Space g = fixtures::ex1_with_trivial();
  const Space r = reduce(g);
  const std::uint64_t n = std::uint64_t(1) << g.w()->size();
  const auto restrict_labels = [&](const std::vector<std::string>& full) {
    std::vector<std::string> kept;
    for (const auto& label : full)
      if (r.u()->has(label)) kept.push_back(label);
    return kept;
  };
  for (std::uint64_t m = 0; m < n; ++m) {
    const ElementSet x = ElementSet::from_mask(g.w(), m);
    CHECK(lower_approx(r, x).labels() == restrict_labels(lower_approx(g, x).labels()));
    CHECK(upper_approx(r, x).labels() == restrict_labels(upper_approx(g, x).labels()));
  }
}

TEST_CASE("enumeration caps are enforced") {
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::string>> t;
  for (int i = 0; i < 21; ++i) labels.push_back("w" + std::to_string(i));
  t["u1"] = {};
  const Space g = build_space({"u1"}, labels, t, DeciderSpec::intersects());
  CHECK_THROWS_AS(check_partial_monotone(g, MonotoneScope::space), SizeCapError);
  CHECK_THROWS_AS(inflection_points(g, std::size_t(0)), SizeCapError);
  CHECK_THROWS_AS(trivial_elements(g), SizeCapError);
  CHECK_THROWS_AS(reduce(g), SizeCapError);
}
