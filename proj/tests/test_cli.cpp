#include "support.hpp"

#include <quiverrep/cli.hpp>

#include <gtest/gtest.h>

using namespace qt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string star(std::size_t n) { return run({"gen", "star", "--n", std::to_string(n)}).out; }

std::string kronecker_file() {
  return R"({"quiver": {"vertices": ["1", "2"], "arrows": [
              {"name": "a", "source": "1", "target": "2"}, {"name": "b", "source": "1", "target": "2"}]},
            "representations": {
              "R10": {"dims": [1, 1], "maps": {"a": [["1"]], "b": [["0"]]}},
              "R01": {"dims": [1, 1], "maps": {"a": [["0"]], "b": [["1"]]}}}})";
}

}  // namespace

TEST(Cli, StarPipeline) {
  auto r = run({"sing-type", "M", "U", "V", "--seed", "7"}, star(4));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ConeOverRNC(degree=2)\n");
}

TEST(Cli, HomAndCodimOnStar) {
  const auto ws = star(3);
  EXPECT_EQ(run({"hom", "U", "M"}, ws).out, "2\n");
  EXPECT_EQ(run({"codim", "M", "N"}, ws).out, "2\n");
  EXPECT_EQ(run({"ext", "V", "U"}, ws).out, "2\n");
  auto hyp = run({"check-hyp", "M", "U", "V"}, ws);
  EXPECT_EQ(hyp.code, 0);
  EXPECT_NE(hyp.out.find("holds"), std::string::npos);
}

TEST(Cli, ReadsNamedFile) {
  const std::string path = testing::TempDir() + "star3.json";
  {
    std::ofstream f(path);
    f << star(3);
  }
  EXPECT_EQ(run({"hom", path, "U", "M"}).out, "2\n");
  EXPECT_EQ(run({"hom", testing::TempDir() + "missing.json", "U", "M"}).code, 2);
}

TEST(Cli, HomOrderViolationExitsOne) {
  auto r = run({"homorder", "R10", "R01", "--probes", "R10"}, kronecker_file());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violated by probe R10"), std::string::npos) << r.out;
  auto d = run({"homorder", "R10", "R01"}, kronecker_file());
  EXPECT_EQ(d.code, 1);
}

TEST(Cli, HypothesesFailExitOne) {
  auto r = run({"check-hyp", "N", "U", "V"}, star(3));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"sing-type", "N", "U", "V"}, star(3)).code, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"hom", "U", "Nope"}, star(3)).code, 2);
  EXPECT_EQ(run({"hom", "U"}, star(3)).code, 2);
  EXPECT_EQ(run({"hom", "U", "M"}, "{ not json").code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--field", "fp:9", "hom", "U", "M"}, star(3)).code, 2);
  EXPECT_EQ(run({"gen", "star", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "star", "--n", "3", "--points", "1,0;0,1;2,0"}).code, 2);
  auto loop = run({"hom", "X", "X"}, R"({"quiver": {"vertices": ["x"], "arrows": [{"name": "l", "source": "x", "target": "x"}]}})");
  EXPECT_EQ(loop.code, 2);
  EXPECT_NE(loop.err.find("quiver must be acyclic"), std::string::npos);
}

TEST(Cli, DeltaCommand) {
  // 0 -> S2 -> R10 -> S1 -> 0 on the Kronecker quiver
  const std::string ws = R"({"quiver": {"vertices": ["1", "2"], "arrows": [
      {"name": "a", "source": "1", "target": "2"}, {"name": "b", "source": "1", "target": "2"}]},
    "representations": {
      "S1": {"dims": [1, 0]}, "S2": {"dims": [0, 1]},
      "R": {"dims": [1, 1], "maps": {"a": [["1"]], "b": [["0"]]}}},
    "morphisms": {
      "f": {"source": "S2", "target": "R", "components": {"2": [["1"]]}},
      "g": {"source": "R", "target": "S1", "components": {"1": [["1"]]}}}})";
  auto r = run({"delta", "f", "g", "S2"}, ws);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "delta = 1\ndelta' = 0\n");
  EXPECT_EQ(run({"delta", "g", "f", "S2"}, ws).code, 2);
}

TEST(Cli, JsonReportIsStable) {
  const auto ws = star(5);
  auto a = run({"--json", "--no-timestamp", "sing-type", "M", "U", "V", "--seed", "3"}, ws);
  auto b = run({"--json", "--no-timestamp", "sing-type", "M", "U", "V", "--seed", "3"}, ws);
  EXPECT_EQ(a.out, b.out);
  auto j = Json::parse(a.out);
  for (const char* key : {"command", "inputs", "seed", "results", "delta_log", "degree", "exit_code"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_FALSE(j.contains("timestamp"));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["delta_log"].size(), 5u);
  auto t = Json::parse(run({"--json", "hom", "U", "M"}, ws).out);
  EXPECT_TRUE(t.contains("timestamp"));
}

TEST(Cli, VerifyChain) {
  auto r = run({"verify-chain", "M", "U", "V", "--samples", "10"}, star(4));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rank one: ok"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("span: 3 (expected 3)"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify-chain", "M", "U", "V", "--samples", "0"}, star(4)).code, 1);
}

TEST(Cli, PrimeField) {
  auto ws = run({"--field", "fp:101", "gen", "star", "--n", "5"}).out;
  auto r = run({"--field", "fp:101", "sing-type", "M", "U", "V"}, ws);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "ConeOverRNC(degree=3)\n");
}

TEST(Cli, GeneratedWorkspaceRoundTrips) {
  auto text = star(4);
  EXPECT_EQ(emit_workspace(parse_workspace<Q>(text)), text);
}
