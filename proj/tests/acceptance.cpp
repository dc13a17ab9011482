// Acceptance gate: one PASS/FAIL line per criterion, with runtimes. Exits
// nonzero when any criterion fails.

#include <quiverrep/cli.hpp>
#include <quiverrep/star.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using namespace quiverrep;
using Q = Rational;

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

// Points (0:1), (1:t) for distinct integers t, so no two coincide in P^1.
std::string shifted_points(std::size_t n) {
  std::string s = "0,1";
  for (std::size_t i = 1; i < n; ++i) {
    const long t = (i % 2 ? 1 : -1) * static_cast<long>((i + 1) / 2) + 3;
    s += ";1," + std::to_string(t);
  }
  return s;
}

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Instance {
  std::size_t n;
  std::string seed;
  std::string workspace;
};

std::vector<Instance> star_instances() {
  std::vector<Instance> out;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto ns = std::to_string(n);
    out.push_back({n, "7", run({"gen", "star", "--n", ns}).out});
    out.push_back({n, "1234", run({"gen", "star", "--n", ns, "--points", shifted_points(n)}).out});
  }
  return out;
}

Check criterion1() {
  Check c;
  const auto ws = run({"gen", "star", "--n", "3", "--points", "1,0;0,1;1,1"}).out;
  auto hom = [&](const char* x, const char* y) {
    auto r = run({"hom", x, y}, ws);
    return r.code == 0 ? std::stol(r.out) : -1;
  };
  const std::vector<std::tuple<const char*, const char*, long>> table{
      {"U", "M", 2}, {"M", "V", 2}, {"U", "U", 1}, {"U", "V", 1}, {"V", "V", 1}, {"V", "U", 0}, {"M", "M", 1}};
  for (auto [x, y, want] : table) {
    const long got = hom(x, y);
    if (got != want) c.fail(std::string("[") + x + "," + y + "] = " + std::to_string(got));
  }
  if (hom("N", "N") - hom("M", "M") != 2) c.fail("[N,N]-[M,M] != 2");
  return c;
}

Check criterion2(const std::vector<Instance>& inst, std::vector<Json>& reports) {
  Check c;
  for (const auto& i : inst) {
    auto r = run({"--json", "--no-timestamp", "sing-type", "M", "U", "V", "--seed", i.seed}, i.workspace);
    auto plain = run({"sing-type", "M", "U", "V", "--seed", i.seed}, i.workspace);
    const auto want = "ConeOverRNC(degree=" + std::to_string(i.n - 2) + ")\n";
    if (r.code != 0 || plain.out != want) {
      c.fail("n=" + std::to_string(i.n) + " seed " + i.seed + ": " + plain.out + plain.err);
      continue;
    }
    reports.push_back(Json::parse(r.out));
  }
  return c;
}

Check criterion3(const std::vector<Instance>& inst) {
  Check c;
  for (const auto& i : inst) {
    auto r = run({"--json", "--no-timestamp", "check-hyp", "M", "U", "V"}, i.workspace);
    if (r.code != 0) c.fail("n=" + std::to_string(i.n) + ": " + r.out + r.err);
  }
  return c;
}

Check criterion4(const std::vector<Instance>& inst, const std::vector<Json>& reports) {
  Check c;
  if (reports.size() != inst.size()) c.fail("missing chain reports");
  for (std::size_t k = 0; k < reports.size() && k < inst.size(); ++k) {
    const auto& log = reports[k]["delta_log"];
    const std::size_t r = inst[k].n - 2;
    const auto ws = parse_workspace<Q>(inst[k].workspace);
    const auto u0 = ws.rep("U")->dims(), v = ws.rep("V")->dims();
    if (log.size() != r + 2) c.fail("n=" + std::to_string(inst[k].n) + ": chain length " + std::to_string(log.size()));
    for (const auto& step : log) {
      const std::size_t i = step["i"];
      const std::size_t dv = step["delta_V"], dpv = step["delta_prime_V"];
      const bool last = i == r + 2;
      if (!last && (dv != 0 || dpv != 1)) c.fail("n=" + std::to_string(inst[k].n) + ": defect at i=" + std::to_string(i));
      if (last && dpv != 0) c.fail("n=" + std::to_string(inst[k].n) + ": last sequence does not split");
      if (step["dims_U_i"].get<DimVector>() != u0 + i * v) c.fail("dims of U_" + std::to_string(i));
    }
  }
  return c;
}

Check criterion56(bool rank_one) {
  Check c;
  for (std::size_t n : {4, 5, 6}) {
    const auto ws = run({"gen", "star", "--n", std::to_string(n)}).out;
    auto r = run({"--json", "--no-timestamp", "verify-chain", "M", "U", "V", "--samples", "20", "--seed", "11"}, ws);
    if (r.code != 0) {
      c.fail("n=" + std::to_string(n) + ": " + r.err);
      continue;
    }
    const auto j = Json::parse(r.out)["results"];
    if (rank_one) {
      const auto& ranks = j["rank_one"]["ranks"];
      if (ranks.size() != 20) c.fail("n=" + std::to_string(n) + ": sample count");
      for (const auto& x : ranks) {
        if (x != 1) c.fail("n=" + std::to_string(n) + ": sampled rank " + x.dump());
      }
    } else {
      const auto& dims = j["span"]["running_dims"];
      if (dims.empty() || dims.back() != n - 1 || j["span"]["expected"] != n - 1) {
        c.fail("n=" + std::to_string(n) + ": span " + j["span"].dump());
      }
    }
  }
  return c;
}

Check criterion7(const char* binary) {
  Check c;
  const std::string cmd = std::string(binary) + " --gtest_brief=1 > /dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0) c.fail("property suite failed: run " + std::string(binary));
  return c;
}

Check criterion8() {
  Check c;
  const std::string ws = R"({"quiver": {"vertices": ["1", "2"], "arrows": [
      {"name": "a", "source": "1", "target": "2"}, {"name": "b", "source": "1", "target": "2"}]},
    "representations": {
      "R10": {"dims": [1, 1], "maps": {"a": [["1"]], "b": [["0"]]}},
      "R01": {"dims": [1, 1], "maps": {"a": [["0"]], "b": [["1"]]}}}})";
  auto r = run({"homorder", "R10", "R01"}, ws);
  if (r.code != 1) c.fail("exit code " + std::to_string(r.code));
  if (r.out.find("violated by probe") == std::string::npos) c.fail("no violating probe reported: " + r.out);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const char* properties = argc > 1 ? argv[1] : "./test_properties";
  bool all = true;
  auto report = [&](int id, double limit, const std::function<Check()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) c.fail("runtime over " + std::to_string(limit) + " s");
    all = all && c.ok;
    std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << " (" << secs << " s)";
    if (!c.ok) std::cout << " " << c.detail;
    std::cout << std::endl;
  };

  std::vector<Instance> inst;
  std::vector<Json> reports;
  report(1, 1.0, criterion1);
  report(2, 30.0, [&] {
    inst = star_instances();
    return criterion2(inst, reports);
  });
  report(3, 0, [&] { return criterion3(inst); });
  report(4, 0, [&] { return criterion4(inst, reports); });
  report(5, 0, [] { return criterion56(true); });
  report(6, 0, [] { return criterion56(false); });
  report(7, 120.0, [&] { return criterion7(properties); });
  report(8, 0, criterion8);
  return all ? 0 : 1;
}
