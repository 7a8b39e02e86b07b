#pragma once

// Shared fixtures: the two small spaces and the belief structure that most of
// the suite is written against.
//
//   ex1: U = {u1,u2}, W = {a,b}, T(u1) = {a}, T(u2) = {a,b}, inclusion decider
//   ex2: U = {v}, W = {a,b,c}, T(v) = {a}, cardinality threshold k = 2
//   b1:  W = {a,b}, m({a}) = 1/2, m({a,b}) = 1/2

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "sapprox/space.hpp"
#include "sapprox/evidence.hpp"

namespace fixtures {

inline sapprox::Space ex1() {
  return sapprox::build_space({"u1", "u2"}, {"a", "b"},
                              {{"u1", {"a"}}, {"u2", {"a", "b"}}},
                              sapprox::DeciderSpec::subseteq());
}

// ex1 plus a trivial element u3 with T(u3) = {}: under inclusion S({}, {}) = 1,
// so its only minimal accepted set is the empty set.
inline sapprox::Space ex1_with_trivial() {
  return sapprox::build_space({"u1", "u2", "u3"}, {"a", "b"},
                              {{"u1", {"a"}}, {"u2", {"a", "b"}}, {"u3", {}}},
                              sapprox::DeciderSpec::subseteq());
}

inline sapprox::Space ex2() {
  return sapprox::build_space({"v"}, {"a", "b", "c"}, {{"v", {"a"}}},
                              sapprox::DeciderSpec::card_threshold(2));
}

inline sapprox::BeliefStructure b1() {
  return sapprox::BeliefStructure::build_from_labels(
      {"a", "b"}, {{{"a"}, sapprox::Rational(1, 2)}, {{"a", "b"}, sapprox::Rational(1, 2)}});
}

inline const std::string ex1_json = R"({"U":["u1","u2"],"W":["a","b"],)"
                                    R"("T":{"u1":["a"],"u2":["a","b"]},)"
                                    R"("S":{"kind":"subseteq"}})";

inline const std::string ex2_json = R"({"U":["v"],"W":["a","b","c"],)"
                                    R"("T":{"v":["a"]},)"
                                    R"("S":{"kind":"card_threshold","k":2}})";

inline const std::string b1_json = R"({"W":["a","b"],)"
                                   R"("m":[{"set":["a"],"value":"1/2"},)"
                                   R"({"set":["a","b"],"value":"1/2"}]})";

// Writes `content` to a fresh file in a per-process scratch directory and
// returns its path.
inline std::string scratch_file(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("sapprox-tests-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

}  // namespace fixtures
