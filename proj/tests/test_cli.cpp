#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sapprox/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = sapprox::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ex1_path() { return fixtures::scratch_file("ex1.json", fixtures::ex1_json); }
std::string ex2_path() { return fixtures::scratch_file("ex2.json", fixtures::ex2_json); }
std::string b1_path() { return fixtures::scratch_file("b1.json", fixtures::b1_json); }

}  // namespace

TEST_CASE("regions golden output") {
  const CliResult r = run({"regions", "--space", ex1_path(), "--set", "a"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lower\":[\"u1\"],\"upper\":[\"u1\",\"u2\"],"
                 "\"pos\":[\"u1\"],\"neg\":[],\"br\":[\"u2\"]}\n");
}

TEST_CASE("regions accepts the empty query set") {
  const CliResult r = run({"regions", "--space", ex1_path(), "--set", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lower\":[],\"upper\":[],\"pos\":[],\"neg\":[\"u1\",\"u2\"],\"br\":[]}\n");
}

TEST_CASE("quality golden output") {
  CHECK(run({"quality", "--space", ex1_path(), "--set", "a"}).out ==
        "{\"q_lower\":\"1/2\",\"q_upper\":\"1/1\"}\n");
  CHECK(run({"quality", "--space", ex1_path(), "--set", "b"}).out ==
        "{\"q_lower\":\"0/1\",\"q_upper\":\"1/2\"}\n");
}

TEST_CASE("check reports monotonicity for both scopes") {
  CHECK(run({"check", "--space", ex1_path()}).out == "{\"scope\":\"space\",\"holds\":true}\n");
  CHECK(run({"check", "--space", ex2_path(), "--scope", "decider"}).out ==
        "{\"scope\":\"decider\",\"holds\":true}\n");
}

TEST_CASE("reduce drops the trivial element and emits a space document") {
  const std::string path = fixtures::scratch_file(
      "ex1t.json",
      R"({"U":["u1","u2","u3"],"W":["a","b"],"T":{"u1":["a"],"u2":["a","b"],"u3":[]},)"
      R"("S":{"kind":"subseteq"}})");
  const CliResult r = run({"reduce", "--space", path});
  CHECK(r.code == 0);
  CHECK(r.out == fixtures::ex1_json + "\n");
}

TEST_CASE("inflection golden output") {
  CHECK(run({"inflection", "--space", ex1_path()}).out ==
        "{\"u1\":[[\"a\"]],\"u2\":[[\"a\",\"b\"]]}\n");
  CHECK(run({"inflection", "--space", ex2_path()}).out ==
        "{\"v\":[[\"a\",\"b\"],[\"a\",\"c\"],[\"b\",\"c\"]]}\n");
}

TEST_CASE("belief from-space on ex1 and ex2") {
  const CliResult ok = run({"belief", "from-space", "--space", ex1_path()});
  CHECK(ok.code == 0);
  CHECK(ok.out == R"({"W":["a","b"],"m":[{"set":["a"],"value":"1/2"},)"
                  R"({"set":["a","b"],"value":"1/2"}],"valid":true,"diagnostics":[]})"
                  "\n");

  const CliResult bad = run({"belief", "from-space", "--space", ex2_path()});
  CHECK(bad.code == 0);  // a computed verdict, not an error
  CHECK(bad.out.find("\"value\":\"-2/1\"") != std::string::npos);
  CHECK(bad.out.find("\"valid\":false") != std::string::npos);
}

TEST_CASE("space from-belief emits the canonical construction") {
  const CliResult r = run({"space", "from-belief", "--belief", b1_path()});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"U":["e1","e2"],"W":["a","b"],"T":{"e1":["a"],"e2":["a","b"]},)"
                 R"("S":{"kind":"subseteq"}})"
                 "\n");
}

TEST_CASE("bel-pl golden output") {
  CHECK(run({"bel-pl", "--belief", b1_path(), "--set", "a"}).out ==
        "{\"bel\":\"1/2\",\"pl\":\"1/1\",\"ignorance\":\"1/2\"}\n");
  CHECK(run({"bel-pl", "--belief", b1_path(), "--set", "b"}).out ==
        "{\"bel\":\"0/1\",\"pl\":\"1/2\",\"ignorance\":\"1/2\"}\n");
}

TEST_CASE("induce carries a belief across a space") {
  const std::string bu = fixtures::scratch_file(
      "bu.json", R"({"W":["u1","u2"],"m":[{"set":["u1","u2"],"value":"1/1"}]})");
  const CliResult r = run({"induce", "--belief", bu, "--space", ex1_path()});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"W":["a","b"],"m":[{"set":["a"],"value":"1/2"},)"
                 R"({"set":["a","b"],"value":"1/2"}],"valid":true,"diagnostics":[]})"
                 "\n");
}

TEST_CASE("verify exit codes: 0 on ex1, 2 on ex2") {
  const CliResult ok = run({"verify", "--space", ex1_path(), "--seed", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"status\":\"counterexample\"") == std::string::npos);

  const CliResult bad = run({"verify", "--space", ex2_path(), "--seed", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("\"claim\":\"P3.5\",\"status\":\"counterexample\"") != std::string::npos);
}

TEST_CASE("verify emits one report line per selected claim, in canonical order") {
  const CliResult r = run({"verify", "--random", "5", "--seed", "42", "--claims", "T3.9,P3.2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> claims;
  while (std::getline(lines, line))
    claims.push_back(sapprox::Json::parse(line).at("claim").get<std::string>());
  CHECK(claims == std::vector<std::string>{"P3.2", "T3.9"});
}

TEST_CASE("verify --random honors the trial count") {
  const CliResult r = run({"verify", "--random", "100", "--seed", "42", "--claims", "P3.2"});
  CHECK(r.code == 0);
  const sapprox::Json report = sapprox::Json::parse(r.out);
  CHECK(report.at("claim") == "P3.2");
  CHECK(report.at("status") == "holds");
  CHECK(report.at("trials") == 100);
}

TEST_CASE("errors exit with code 1 and a one-line diagnostic") {
  CHECK(run({"regions", "--space", "/nonexistent.json", "--set", "a"}).code == 1);
  CHECK(run({"regions", "--space", ex1_path(), "--set", "z"}).code == 1);
  CHECK(run({"regions", "--space", ex1_path()}).code == 1);  // missing --set
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"verify", "--claims", "P3.2"}).code == 1);  // no source
  CHECK(run({"verify", "--random", "2", "--claims", "bogus"}).code == 1);

  const std::string bad = fixtures::scratch_file("bad.json", "{not json");
  const CliResult r = run({"regions", "--space", bad, "--set", "a"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("output is byte-identical across repeated runs") {
  const std::vector<std::string> args = {"verify", "--random", "20", "--seed", "7"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("--out writes the document to a file") {
  const std::string out_path = fixtures::scratch_file("out.json", "");
  const CliResult r = run({"quality", "--space", ex1_path(), "--set", "a", "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "{\"q_lower\":\"1/2\",\"q_upper\":\"1/1\"}\n");
}

TEST_CASE("emitted space documents are accepted back by the reader") {
  const CliResult emitted = run({"space", "from-belief", "--belief", b1_path()});
  const std::string path = fixtures::scratch_file("roundtrip.json", emitted.out);
  const CliResult again = run({"regions", "--space", path, "--set", "a"});
  CHECK(again.code == 0);
  CHECK(again.out == "{\"lower\":[\"e1\"],\"upper\":[\"e1\",\"e2\"],"
                     "\"pos\":[\"e1\"],\"neg\":[],\"br\":[\"e2\"]}\n");
}

TEST_CASE("help exits zero") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("regions") != std::string::npos);
}
