#pragma once

// Command-line front end. Exit codes: 0 success or the property holds,
// 1 negative mathematical result, 2 input or usage error.

#include <quiverrep/rnc_chain.hpp>
#include <quiverrep/workspace.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace quiverrep {

namespace cli {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string field = "q";
  bool json = false;
  bool no_timestamp = false;
  std::string command;
  std::vector<std::string> args;  // [FILE] NAME...
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap;
  std::size_t samples = 20;
  std::string probes;
  std::size_t star_n = 3;
  std::string star_points;
};

/// Thrown for bad invocations that CLI11 cannot detect (name counts, files).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Negative : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  Json inputs = Json::object();
  Json results = Json::object();
  Json delta_log = Json::array();
  Json degree;
  std::vector<std::string> lines;
  int exit_code = kOk;
};

inline std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <Field F>
Workspace<F> load(const Options& o, std::size_t names, std::istream& in, std::vector<std::string>& out_names,
                  std::string& source) {
  if (o.args.size() == names) {
    source = "<stdin>";
    out_names = o.args;
    return parse_workspace<F>(read_all(in));
  }
  if (o.args.size() == names + 1) {
    source = o.args.front();
    out_names.assign(o.args.begin() + 1, o.args.end());
    std::ifstream file(source);
    if (!file) throw UsageError("cannot open '" + source + "'");
    return parse_workspace<F>(read_all(file));
  }
  throw UsageError(o.command + ": expected [FILE] followed by " + std::to_string(names) + " names, got " +
                   std::to_string(o.args.size()) + " arguments");
}

inline Json dims_json(const DimVector& d) { return Json(d); }

template <Field F>
Json delta_log_json(const ChainReport<F>& r) {
  Json log = Json::array();
  for (const auto& s : r.delta_log) {
    log.push_back({{"i", s.index},
                   {"delta_V", s.delta_v},
                   {"delta_prime_V", s.delta_prime_v},
                   {"delta_left", s.delta_left},
                   {"split", s.split},
                   {"dims_U_i", dims_json(s.middle_dims)}});
  }
  return log;
}

template <Field F>
std::vector<NamedRep<F>> resolve_probes(const Workspace<F>& ws, const std::string& m_name,
                                        const std::string& n_name, const std::string& probe_list) {
  if (probe_list.empty()) {
    std::vector<NamedRep<F>> extra;
    for (const auto& [name, r] : ws.reps) extra.push_back({name, r});
    return default_probes(ws.rep(m_name), ws.rep(n_name), extra, m_name, n_name);
  }
  std::vector<NamedRep<F>> probes;
  std::stringstream ss(probe_list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.size() > 3 && name.rfind("S(", 0) == 0 && name.back() == ')') {
      auto v = ws.quiver->vertex_index(name.substr(2, name.size() - 3));
      if (!v) throw NameError("unknown vertex in probe '" + name + "'");
      probes.push_back({name, share(Rep<F>::simple(ws.quiver, *v))});
    } else {
      probes.push_back({name, ws.rep(name)});
    }
  }
  return probes;
}

template <Field F>
std::vector<std::pair<F, F>> parse_points(const std::string& text) {
  std::vector<std::pair<F, F>> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw UsageError("points must look like 'a,b;c,d;...'");
    pts.emplace_back(scalar_traits<F>::parse(item.substr(0, comma)), scalar_traits<F>::parse(item.substr(comma + 1)));
  }
  return pts;
}

template <Field F>
void run_command(const Options& o, std::istream& in, Output& out) {
  Json& results = out.results;
  std::vector<std::string> names;
  std::string source;
  auto inputs = [&] { out.inputs = {{"file", source}, {"names", names}, {"field", o.field}}; };

  if (o.command == "gen star") {
    auto family = o.star_points.empty() ? gen_star<F>(o.star_n) : gen_star<F>(o.star_n, parse_points<F>(o.star_points));
    out.inputs = {{"n", o.star_n}, {"field", o.field}};
    out.lines.push_back(emit_workspace(star_workspace(family)));
    return;
  }
  if (o.command == "hom") {
    auto ws = load<F>(o, 2, in, names, source);
    inputs();
    const auto d = hom_dim(*ws.rep(names[0]), *ws.rep(names[1]));
    results["hom_dim"] = d;
    out.lines.push_back(std::to_string(d));
  } else if (o.command == "ext") {
    auto ws = load<F>(o, 2, in, names, source);
    inputs();
    auto space = ext_space(ws.rep(names[0]), ws.rep(names[1]));
    results = {{"ext1_dim", space->dim()},
               {"cocycle_dim", space->cocycle_dim()},
               {"coboundary_rank", space->coboundary_rank()}};
    out.lines.push_back(std::to_string(space->dim()));
  } else if (o.command == "delta") {
    auto ws = load<F>(o, 3, in, names, source);
    inputs();
    auto sigma = make_ses(ws.morphism(names[0]), ws.morphism(names[1]));
    const auto& x = *ws.rep(names[2]);
    const auto d = delta(sigma, x);
    const auto dp = delta_prime(sigma, x);
    results = {{"delta", d}, {"delta_prime", dp}, {"split", is_split(sigma)}};
    out.lines.push_back("delta = " + std::to_string(d));
    out.lines.push_back("delta' = " + std::to_string(dp));
  } else if (o.command == "codim") {
    auto ws = load<F>(o, 2, in, names, source);
    inputs();
    const auto c = codim(*ws.rep(names[0]), *ws.rep(names[1]));
    results["codim"] = c;
    out.lines.push_back(std::to_string(c));
  } else if (o.command == "homorder") {
    auto ws = load<F>(o, 2, in, names, source);
    inputs();
    auto m = ws.rep(names[0]);
    auto n = ws.rep(names[1]);
    auto report = hom_order_check(*m, *n, resolve_probes(ws, names[0], names[1], o.probes));
    Json probes = Json::array();
    for (const auto& p : report.probes) {
      probes.push_back({{"probe", p.name},
                        {"hom_M_Y", p.hom_m_y},
                        {"hom_N_Y", p.hom_n_y},
                        {"hom_Y_M", p.hom_y_m},
                        {"hom_Y_N", p.hom_y_n},
                        {"holds", p.holds()}});
      out.lines.push_back(p.name + ": [M,Y]=" + std::to_string(p.hom_m_y) + " [N,Y]=" + std::to_string(p.hom_n_y) +
                          " [Y,M]=" + std::to_string(p.hom_y_m) + " [Y,N]=" + std::to_string(p.hom_y_n) +
                          (p.holds() ? " ok" : " VIOLATED"));
    }
    results["probes"] = probes;
    results["holds"] = report.holds();
    if (auto v = report.violation()) {
      results["violating_probe"] = v->name;
      out.lines.push_back("violated by probe " + v->name + ": " + names[1] + " is not a degeneration of " + names[0]);
      out.exit_code = kNegative;
    } else {
      out.lines.push_back("holds");
    }
  } else if (o.command == "check-hyp") {
    auto ws = load<F>(o, 3, in, names, source);
    inputs();
    auto h = check_hypotheses(*ws.rep(names[0]), *ws.rep(names[1]), *ws.rep(names[2]));
    results = {{"hom_U_M", h.hom_u_m}, {"hom_U_N", h.hom_u_n}, {"hom_M_V", h.hom_m_v},
               {"hom_N_V", h.hom_n_v}, {"codim", h.codim},     {"holds", h.holds()}};
    auto mark = [](bool b) { return b ? " ok" : " FAILS"; };
    out.lines.push_back("[U,M]=" + std::to_string(h.hom_u_m) + " [U,N]=" + std::to_string(h.hom_u_n) + mark(h.hom_left()));
    out.lines.push_back("[M,V]=" + std::to_string(h.hom_m_v) + " [N,V]=" + std::to_string(h.hom_n_v) + mark(h.hom_right()));
    out.lines.push_back("codim=" + std::to_string(h.codim) + mark(h.codim_two()));
    out.lines.push_back(h.holds() ? "holds" : "fails");
    if (!h.holds()) out.exit_code = kNegative;
  } else if (o.command == "sing-type" || o.command == "verify-chain") {
    auto ws = load<F>(o, 3, in, names, source);
    inputs();
    auto m = ws.rep(names[0]);
    auto u = ws.rep(names[1]);
    auto v = ws.rep(names[2]);
    auto h = check_hypotheses(*m, *u, *v);
    if (!h.holds()) {
      results["hypotheses_hold"] = false;
      throw Negative("hypotheses fail: [U,M]=" + std::to_string(h.hom_u_m) + " [U,N]=" + std::to_string(h.hom_u_n) +
                     ", [M,V]=" + std::to_string(h.hom_m_v) + " [N,V]=" + std::to_string(h.hom_n_v) +
                     ", codim=" + std::to_string(h.codim));
    }
    SingularityOptions opts;
    opts.cap = o.cap;
    auto r = singularity_type(m, u, v, o.seed, opts);
    results["type"] = r.type.to_string();
    results["delta_M"] = r.delta_m;
    results["delta_prime_V"] = r.delta_prime_v;
    out.lines.push_back(r.type.to_string());
    if (r.chain) {
      out.delta_log = delta_log_json(*r.chain);
      out.degree = r.chain->degree;
      results["split_index"] = r.chain->split_index;
      results["cap"] = r.chain->cap;
    } else {
      out.delta_log = Json::array();
      out.degree = 1;
    }
    if (o.command == "verify-chain") {
      if (!r.chain) {
        out.lines.push_back("regular: no chain to verify");
      } else {
        auto ro = verify_rank_one(*r.chain, o.samples, o.seed);
        auto sp = verify_span(*r.chain, o.samples, o.seed);
        results["rank_one"] = {{"ok", ro.ok}, {"ranks", ro.values}, {"failure", ro.failure}};
        results["span"] = {{"ok", sp.ok}, {"running_dims", sp.values}, {"expected", sp.expected}, {"failure", sp.failure}};
        out.lines.push_back(std::string("rank one: ") + (ro.ok ? "ok" : "FAILS " + ro.failure) + " (" +
                            std::to_string(ro.values.size()) + " samples)");
        out.lines.push_back("span: " + std::to_string(sp.values.empty() ? 0 : sp.values.back()) + " (expected " +
                            std::to_string(sp.expected) + ")" + (sp.ok ? "" : " FAILS"));
        if (!ro.ok || !sp.ok) out.exit_code = kNegative;
      }
    }
  } else {
    throw UsageError("unknown command '" + o.command + "'");
  }
}

}  // namespace cli

/// Runs one command; args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  cli::Options o;
  CLI::App app{"Exact computations with representations of acyclic quivers", "quiverrep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "Scalar field: q (rationals) or fp:<prime>");
  app.add_flag("--json", o.json, "Emit a machine-readable report");
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from JSON reports");

  auto positional = [&](CLI::App* sub, const char* names) {
    sub->add_option("args", o.args, std::string("[FILE] ") + names + " (FILE defaults to stdin)");
  };
  positional(app.add_subcommand("hom", "dim Hom(X, Y)"), "X Y");
  positional(app.add_subcommand("ext", "dim Ext^1(V, U)"), "V U");
  positional(app.add_subcommand("delta", "delta and delta' of the sequence (f, g) at X"), "F G X");
  positional(app.add_subcommand("codim", "[N,N] - [M,M]"), "M N");
  auto* homorder = app.add_subcommand("homorder", "hom-order test for M <= N");
  positional(homorder, "M N");
  homorder->add_option("--probes", o.probes, "Comma-separated probe names; S(v) is the simple at v");
  positional(app.add_subcommand("check-hyp", "hypotheses for the singularity computation"), "M U V");
  auto* sing = app.add_subcommand("sing-type", "singularity type of U (+) V in the orbit closure of M");
  positional(sing, "M U V");
  sing->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  sing->add_option("--cap", o.cap, "Chain iteration cap");
  auto* verify = app.add_subcommand("verify-chain", "sing-type plus rank-one and span checks");
  positional(verify, "M U V");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--cap", o.cap, "Chain iteration cap");
  verify->add_option("--samples", o.samples, "Sampled classes")->capture_default_str();
  auto* gen = app.add_subcommand("gen", "generate workspaces");
  gen->require_subcommand(1);
  auto* star = gen->add_subcommand("star", "star quiver with n arms and representations U, V, M, N");
  star->add_option("--n", o.star_n, "Number of arms (>= 3)")->capture_default_str();
  star->add_option("--points", o.star_points, "Points of P^1 as 'a,b;c,d;...'");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return cli::kInputError;
  }
  for (auto* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    if (o.command == "gen") o.command = "gen star";
  }

  cli::Output result;
  std::string error;
  try {
    if (o.field == "q") {
      cli::run_command<Rational>(o, in, result);
    } else if (o.field.rfind("fp:", 0) == 0) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(o.field.substr(3));
      } catch (const std::exception&) {
        throw cli::UsageError("bad prime in --field " + o.field);
      }
      ModP::Scope scope(p);
      cli::run_command<ModP>(o, in, result);
    } else {
      throw cli::UsageError("--field must be q or fp:<prime>");
    }
  } catch (const cli::Negative& e) {
    result.exit_code = cli::kNegative;
    error = e.what();
  } catch (const PreconditionError& e) {
    result.exit_code = cli::kNegative;
    error = e.what();
  } catch (const ChainError& e) {
    result.exit_code = cli::kNegative;
    error = e.what();
  } catch (const std::invalid_argument& e) {  // parse, name, shape, sequence and usage errors
    result.exit_code = cli::kInputError;
    error = e.what();
  } catch (const ParseError& e) {
    result.exit_code = cli::kInputError;
    error = e.what();
  } catch (const std::exception& e) {
    result.exit_code = cli::kInputError;
    error = std::string("internal error: ") + e.what();
  }

  if (o.json && o.command != "gen star") {
    Json report;
    report["command"] = o.command;
    report["inputs"] = result.inputs;
    report["seed"] = o.seed;
    report["results"] = result.results;
    report["delta_log"] = result.delta_log;
    report["degree"] = result.degree;
    report["exit_code"] = result.exit_code;
    if (!error.empty()) report["error"] = error;
    if (!o.no_timestamp) report["timestamp"] = cli::utc_timestamp();
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : result.lines) {
      out << line;
      if (line.empty() || line.back() != '\n') out << "\n";
    }
  }
  if (!error.empty()) err << "error: " << error << "\n";
  return result.exit_code;
}

}  // namespace quiverrep
