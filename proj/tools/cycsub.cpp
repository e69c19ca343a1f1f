// cycsub: command line front end. Exit codes: 0 success, 2 precondition or
// parse error, 3 budget exceeded, 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "cycsub/analysis.hpp"
#include "cycsub/artifacts.hpp"
#include "cycsub/constructions.hpp"
#include "cycsub/counting.hpp"
#include "cycsub/errors.hpp"
#include "cycsub/graph6.hpp"
#include "cycsub/hamiltonicity.hpp"
#include "cycsub/numerics.hpp"
#include "cycsub/suites.hpp"
#include "json_report.hpp"

namespace {

using namespace cycsub;
using report::json;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct Input {
  std::string text;
  report::InputDigest digest;
};

Input read_input(const std::string& path) {
  Input in;
  if (path == "-") {
    in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot open '" + path + "'");
    in.text.assign(std::istreambuf_iterator<char>(f), {});
  }
  in.digest = {path, fnv1a64(in.text), in.text.size()};
  return in;
}

std::vector<Graph> parse_graphs(const Input& in) {
  std::istringstream s(in.text);
  auto graphs = read_graph6_all(s);
  if (graphs.empty()) throw ParseError("no graph6 line in '" + in.digest.path + "'");
  return graphs;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write '" + path + "'");
  f << text;
}

void emit(const std::string& path, const report::RunManifest& m, json result) {
  write_text(path, report::envelope(m, std::move(result)).dump(2) + "\n");
}

// ----------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int n = 0;
  int k = 0;
  std::vector<int> cycles;
  std::string out;
  std::string sidecar;
};

int run_construct(const ConstructArgs& a, report::RunManifest& man) {
  struct Built {
    Graph graph;
    DegreeCheck check;
  };
  std::vector<Built> built;
  json params = json::object();
  if (a.family == "extremal") {
    const std::vector<int> cycles = a.cycles.empty() ? std::vector<int>{a.n + 1} : a.cycles;
    auto eg = build_extremal(a.n, cycles);
    params = {{"n", a.n}, {"cycles", cycles}};
    built.push_back({eg.graph, check_extremal(eg)});
  } else if (a.family == "knn") {
    auto g = build_knn(a.n);
    params = {{"n", a.n}};
    built.push_back({g, check_regular(g, a.n)});
  } else if (a.family == "star") {
    auto g = build_star_augmented(a.n);
    params = {{"n", a.n}};
    built.push_back({g, check_min_degree(g, a.n + 1)});
  } else if (a.family == "competitor") {
    auto cg = build_competitor(a.k);
    params = {{"k", a.k}};
    built.push_back({cg.graph, check_competitor(cg)});
  } else {  // regular
    params = {{"n", a.n}};
    for (auto& g : enumerate_regular_complements(a.n)) {
      auto c = check_regular(g, a.n + 1);
      built.push_back({std::move(g), c});
    }
  }

  std::string lines;
  json graphs = json::array();
  bool ok = true;
  for (const auto& b : built) {
    const std::string g6 = to_graph6(b.graph);
    lines += g6 + "\n";
    json row = {{"graph6", g6},
                {"vertices", b.graph.order()},
                {"edges", b.graph.edge_count()},
                {"min_degree", b.check.min_degree},
                {"max_degree", b.check.max_degree},
                {"invariants_ok", b.check.ok}};
    if (!b.check.ok) row["detail"] = b.check.detail;
    graphs.push_back(row);
    ok = ok && b.check.ok;
  }
  write_text(a.out, lines);
  std::string sidecar = a.sidecar;
  if (sidecar.empty() && !a.out.empty() && a.out != "-") sidecar = a.out + ".json";
  if (!sidecar.empty()) {
    emit(sidecar, man, {{"family", a.family}, {"params", params}, {"graphs", graphs}, {"invariants_ok", ok}});
  }
  if (!ok) {
    std::cerr << "construct: family invariants failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

// --------------------------------------------------------------------- count

struct CountArgs {
  std::string in;
  int max_vertices = 20;
  bool force = false;
  int workers = 1;
  std::string out;
};

int run_count(const CountArgs& a, report::RunManifest& man) {
  const auto input = read_input(a.in);
  man.inputs.push_back(input.digest);
  CountOptions opts;
  opts.max_vertices = a.force ? kExactHamMaxVertices : a.max_vertices;
  opts.workers = a.workers;
  json reports = json::array();
  for (const auto& g : parse_graphs(input)) reports.push_back(report::to_json(cyc_count_exact(g, opts)));
  emit(a.out, man, {{"graphs", reports.size()}, {"reports", reports}});
  return kExitOk;
}

// ------------------------------------------------------------------ estimate

struct EstimateArgs {
  std::string in;
  int extremal_n = 0;
  std::vector<int> cycles;
  double p = 0.5;
  std::int64_t samples = 10'000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string decider = "auto";
  std::string out;
};

int run_estimate(const EstimateArgs& a, report::RunManifest& man) {
  if (!(a.p >= 0 && a.p <= 1)) throw PreconditionError("estimate: --p must lie in [0, 1]");
  EstimateOptions opts;
  opts.p_retention = a.p;
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.workers = a.workers;
  opts.decider = a.decider == "gn" ? Decider::gn : a.decider == "exact" ? Decider::exact : Decider::automatic;

  std::optional<ExtremalGraph> eg;
  Graph g;
  if (a.extremal_n > 0) {
    eg = build_extremal(a.extremal_n, a.cycles.empty() ? std::vector<int>{a.extremal_n + 1} : a.cycles);
    g = eg->graph;
    opts.labeling = &*eg;
  } else {
    if (a.in.empty()) throw PreconditionError("estimate: give an input graph or --extremal-n");
    const auto input = read_input(a.in);
    man.inputs.push_back(input.digest);
    const auto graphs = parse_graphs(input);
    if (graphs.size() != 1) throw PreconditionError("estimate: input must hold exactly one graph");
    g = graphs.front();
  }
  json result = report::to_json(estimate_h(g, opts));
  result["vertices"] = g.order();
  result["edges"] = g.edge_count();
  emit(a.out, man, result);
  return kExitOk;
}

// ------------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string in;
  double eps = 1.0 / 320;
  double gamma = 0.1;
  int samples = 256;
  int restarts = 8;
  std::uint64_t seed = 0;
  int workers = 1;
  bool exact_bidense = false;
  std::int64_t concentration_samples = 0;
  std::string out;
};

int run_analyze(const AnalyzeArgs& a, report::RunManifest& man) {
  const auto input = read_input(a.in);
  man.inputs.push_back(input.digest);
  AnalysisParams params;
  params.eps = a.eps;
  params.gamma = a.gamma;
  params.validate();

  json reports = json::array();
  for (const auto& g : parse_graphs(input)) {
    json r = {{"vertices", g.order()},
              {"edges", g.edge_count()},
              {"min_degree", g.order() ? g.min_degree() : 0},
              {"max_degree", g.order() ? g.max_degree() : 0}};
    BiDenseOptions bo;
    bo.exact = a.exact_bidense;
    bo.samples = a.samples;
    bo.seed = a.seed;
    bo.workers = a.workers;
    r["bidense"] = report::to_json(check_bidense(g, a.eps, bo));
    if (g.order() > 0 && 2 * g.min_degree() >= g.order()) {
      ClassifyOptions co;
      co.samples = a.samples;
      co.restarts = a.restarts;
      co.seed = a.seed;
      co.workers = a.workers;
      r["classification"] = report::to_json(classify(g, params, co));
    } else {
      r["classification"] = nullptr;
      r["note"] = "classification needs minimum degree at least m/2";
    }
    if (a.concentration_samples > 0 && g.edge_count() > 0) {
      r["edge_concentration"] =
          report::to_json(edge_concentration_experiment(g, a.concentration_samples, a.seed, a.workers));
    }
    reports.push_back(r);
  }
  emit(a.out, man, {{"graphs", reports.size()}, {"reports", reports}});
  return kExitOk;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  SuiteOptions opts;
  std::string out;
};

int run_verify(const VerifyArgs& a, report::RunManifest& man) {
  const auto r = run_suite(a.suite, a.opts);
  emit(a.out, man, report::to_json(r));
  return r.pass() ? kExitOk : kExitVerification;
}

// --------------------------------------------------------------------- curve

struct CurveArgs {
  double alpha_min = 0.2;
  double alpha_max = 20;
  int points = 400;
  std::string svg;
  std::string csv;
  std::string json_out;
};

int run_curve(const CurveArgs& a, report::RunManifest& man) {
  const auto c = emit_f_alpha_curve(a.alpha_min, a.alpha_max, a.points);
  write_text(a.csv, curve_csv(c));
  if (!a.svg.empty()) write_text(a.svg, curve_svg(c));
  if (!a.json_out.empty()) {
    json extrema = json::array();
    for (const auto& r : c.rows) {
      if (r.is_extremum) extrema.push_back({{"alpha", r.alpha}, {"f", r.f}});
    }
    emit(a.json_out, man,
         {{"rows", c.rows.size()},
          {"min_f", c.min_f},
          {"argmin_alpha", c.argmin_alpha},
          {"extrema", extrema},
          {"pattern", c.pattern},
          {"pattern_ok", c.pattern_ok},
          {"above_half", c.above_half}});
  }
  return c.pattern_ok && c.above_half ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic subsets of dense graphs: constructions, exact counts, estimates and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kToolVersion);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a graph family and write graph6 plus a JSON sidecar");
  construct->add_option("family", ca.family, "extremal | knn | star | competitor | regular")
      ->required()
      ->check(CLI::IsMember({"extremal", "knn", "star", "competitor", "regular"}));
  construct->add_option("--n", ca.n, "Family parameter n");
  construct->add_option("--k", ca.k, "Competitor parameter k (n = k^2)");
  construct->add_option("--cycles", ca.cycles, "Cycle lengths of the 2-factor, comma separated")->delimiter(',');
  construct->add_option("--out", ca.out, "graph6 output path (default stdout)");
  construct->add_option("--sidecar", ca.sidecar, "JSON sidecar path (default <out>.json)");

  CountArgs cn;
  auto* count = app.add_subcommand("count", "Exact cyclic subset count of every graph in a graph6 file");
  count->add_option("in", cn.in, "graph6 file, - for stdin")->required();
  count->add_option("--max-vertices", cn.max_vertices, "Refuse larger graphs")->check(CLI::Range(0, 24));
  count->add_flag("--force", cn.force, "Allow up to 24 vertices");
  count->add_option("--workers", cn.workers)->check(CLI::PositiveNumber);
  count->add_option("--out", cn.out, "JSON output path (default stdout)");

  EstimateArgs es;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of P(G[S] Hamiltonian)");
  estimate->add_option("in", es.in, "graph6 file with one graph, - for stdin");
  estimate->add_option("--extremal-n", es.extremal_n, "Use the extremal family member instead of an input file");
  estimate->add_option("--cycles", es.cycles, "Cycle type for --extremal-n")->delimiter(',');
  estimate->add_option("--p", es.p, "Retention probability");
  estimate->add_option("--samples", es.samples)->check(CLI::PositiveNumber);
  estimate->add_option("--seed", es.seed);
  estimate->add_option("--workers", es.workers)->check(CLI::PositiveNumber);
  estimate->add_option("--decider", es.decider)->check(CLI::IsMember({"auto", "gn", "exact"}));
  estimate->add_option("--out", es.out);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Bi-dense check and case classification");
  analyze->add_option("in", an.in, "graph6 file, - for stdin")->required();
  analyze->add_option("--eps", an.eps);
  analyze->add_option("--gamma", an.gamma);
  analyze->add_option("--samples", an.samples)->check(CLI::PositiveNumber);
  analyze->add_option("--restarts", an.restarts)->check(CLI::NonNegativeNumber);
  analyze->add_option("--seed", an.seed);
  analyze->add_option("--workers", an.workers)->check(CLI::PositiveNumber);
  analyze->add_flag("--exact-bidense", an.exact_bidense, "Exhaustive bi-dense check (m <= 14)");
  analyze->add_option("--concentration-samples", an.concentration_samples,
                      "Also sample e(G[S]) this many times");
  analyze->add_option("--out", an.out);

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run a named check suite; exit 0 iff every check passes");
  verify->add_option("suite", ve.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", ve.opts.n, "Suite-specific size");
  verify->add_option("--instances", ve.opts.instances, "Random instances per check");
  verify->add_option("--m", ve.opts.m, "Order of generated builder instances");
  verify->add_option("--seed", ve.opts.seed);
  verify->add_option("--workers", ve.opts.workers)->check(CLI::PositiveNumber);
  verify->add_option("--out", ve.out);

  CurveArgs cu;
  auto* curve = app.add_subcommand("curve", "Tabulate f(alpha) as CSV and plot it as SVG");
  curve->add_option("--alpha-min", cu.alpha_min);
  curve->add_option("--alpha-max", cu.alpha_max);
  curve->add_option("--points", cu.points);
  curve->add_option("--svg", cu.svg, "SVG output path");
  curve->add_option("--csv", cu.csv, "CSV output path (default stdout)");
  curve->add_option("--json", cu.json_out, "Summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  report::RunManifest man;
  man.args.assign(argv + 1, argv + argc);
  try {
    if (construct->parsed()) {
      man.subcommand = "construct";
      return run_construct(ca, man);
    }
    if (count->parsed()) {
      man.subcommand = "count";
      man.workers = cn.workers;
      return run_count(cn, man);
    }
    if (estimate->parsed()) {
      man.subcommand = "estimate";
      man.seed = es.seed;
      man.workers = es.workers;
      return run_estimate(es, man);
    }
    if (analyze->parsed()) {
      man.subcommand = "analyze";
      man.seed = an.seed;
      man.workers = an.workers;
      return run_analyze(an, man);
    }
    if (verify->parsed()) {
      man.subcommand = "verify";
      man.seed = ve.opts.seed;
      man.workers = ve.opts.workers;
      return run_verify(ve, man);
    }
    man.subcommand = "curve";
    return run_curve(cu, man);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConstructionFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
