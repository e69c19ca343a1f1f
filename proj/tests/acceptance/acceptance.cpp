// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Each criterion also has a wall-clock budget that counts toward its verdict.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cycsub/artifacts.hpp"
#include "cycsub/constructions.hpp"
#include "cycsub/counting.hpp"
#include "cycsub/iso.hpp"
#include "cycsub/numerics.hpp"
#include "cycsub/suites.hpp"
#include "json_report.hpp"

using namespace cycsub;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

// Note is the total check count on success, else the failed check names.
Outcome from_suites(std::initializer_list<const char*> names) {
  Outcome o{true, {}};
  int total = 0;
  std::string failed;
  for (const char* name : names) {
    const auto rep = run_suite(name);
    total += static_cast<int>(rep.checks.size());
    for (const auto& c : rep.checks) {
      if (c.pass) continue;
      o.pass = false;
      failed += std::string(failed.empty() ? "" : "; ") + name + ": " + c.name;
      if (!c.detail.empty()) failed += " (" + c.detail + ")";
    }
  }
  o.note = o.pass ? std::to_string(total) + " checks" : failed;
  return o;
}

Outcome exact_counts() {
  const auto k4 = cyc_count_exact(complete(4));
  const auto c5 = cyc_count_exact(cycle(5));
  const int three[] = {4};
  const auto oct = cyc_count_exact(build_extremal(3, three).graph);
  bool ok = k4.cyclic_count == 5 && c5.cyclic_count == 1 && oct.cyclic_count == 30 &&
            oct.p_exact() == mpq_class(15, 32);
  int knn_ok = 0;
  for (int n = 1; n <= 6; ++n) {
    if (cyc_count_exact(build_knn(n)).p_exact() == p_exact_knn(n)) ++knn_ok;
  }
  ok = ok && knn_ok == 6;
  std::ostringstream s;
  s << "K4=" << k4.cyclic_count << " C5=" << c5.cyclic_count << " octahedron=" << oct.cyclic_count << " ("
    << oct.p_exact().get_str() << "), K_{n,n} n<=6 " << knn_ok << "/6";
  return {ok, s.str()};
}

Outcome monte_carlo() {
  const int three[] = {4};
  const Graph oct = build_extremal(3, three).graph;
  EstimateOptions opts;
  opts.samples = 100'000;
  opts.seed = 20240601;
  auto dump = [&](int workers) {
    opts.workers = workers;
    return report::to_json(estimate_h(oct, opts)).dump();
  };
  const std::string a = dump(1), b = dump(1), c = dump(8);
  opts.workers = 1;
  const auto rep = estimate_h(oct, opts);
  const double truth = 15.0 / 32;
  const double se = std::sqrt(truth * (1 - truth) / static_cast<double>(opts.samples));
  const double z = std::abs(rep.p_hat - truth) / se;
  const bool ok = z <= 4 && rep.undecided_fraction == 0 && a == b && a == c;
  std::ostringstream s;
  s << "p_hat=" << rep.p_hat << " (" << z << " SE), undecided=" << rep.undecided_fraction
    << ", repeat identical=" << (a == b) << ", workers 1 vs 8 identical=" << (a == c);
  return {ok, s.str()};
}

// Cycle lengths of a 2-regular graph, descending.
std::vector<int> cycle_structure(const Graph& two_regular) {
  std::vector<int> lens;
  std::vector<bool> seen(two_regular.order(), false);
  for (int s = 0; s < two_regular.order(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int prev = -1, v = s; !seen[v];) {
      seen[v] = true;
      ++len;
      for (int w : two_regular.neighbor_list(v)) {
        if (w != prev && !seen[w]) {
          prev = v;
          v = w;
          break;
        }
      }
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

Outcome regular_table() {
  const auto graphs = enumerate_regular_complements(4);
  const int five[] = {5};
  const Graph member = build_extremal(4, five).graph;
  std::printf("    %-16s %-10s %-12s %s\n", "complement", "p exact", "p", "family member");
  int members = 0;
  for (const auto& g : graphs) {
    std::string name;
    for (int l : cycle_structure(g.complement())) name += std::string(name.empty() ? "" : "+") + "C" + std::to_string(l);
    const mpq_class p = cyc_count_exact(g).p_exact();
    const bool is_member = isomorphic(g, member);
    members += is_member;
    std::printf("    %-16s %-10s %-12.8f %s\n", name.c_str(), p.get_str().c_str(), p.get_d(), is_member ? "yes" : "");
  }
  return {graphs.size() == 3 && members == 1,
          std::to_string(graphs.size()) + " graphs, " + std::to_string(members) + " family member"};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int occurrences(const std::string& hay, const std::string& needle) {
  int c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

Outcome curve_artifact() {
  constexpr int kPoints = 400;
  const Curve curve = emit_f_alpha_curve(0.2, 20, kPoints);
  const fs::path dir = fs::temp_directory_path() / ("cycsub_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "f_alpha.csv") << curve_csv(curve);
  std::ofstream(dir / "f_alpha.svg") << curve_svg(curve);
  const std::string csv = slurp(dir / "f_alpha.csv"), svg = slurp(dir / "f_alpha.svg");
  fs::remove_all(dir);

  const int rows = occurrences(csv, "\n") - 1;
  std::vector<double> marked;
  for (const auto& r : curve.rows) {
    if (r.is_extremum) marked.push_back(r.alpha);
  }
  const auto roots = g_roots();
  const double want[] = {std::sqrt(roots.r1), 2.0, std::sqrt(roots.r3)};
  bool markers_ok = marked.size() == 3;
  for (std::size_t i = 0; markers_ok && i < 3; ++i) markers_ok = std::abs(marked[i] - want[i]) <= 1e-12 * want[i];
  const bool svg_ok = svg.rfind("<?xml", 0) == 0 && occurrences(svg, "<polyline") == 1 &&
                      occurrences(svg, "<circle") == 3 && svg.find("</svg>") != std::string::npos;
  std::string pattern;
  for (const auto& p : curve.pattern) pattern += (pattern.empty() ? "" : ",") + p;
  std::ostringstream s;
  s << "csv rows=" << rows << ", markers at " << (marked.size() == 3 ? marked[0] : 0) << ", 2, "
    << (marked.size() == 3 ? marked[2] : 0) << ", pattern " << pattern;
  return {rows == kPoints + 3 && markers_ok && svg_ok && curve.pattern_ok, s.str()};
}

struct Criterion {
  const char* label;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"exact counts", 60, exact_counts},
      {"gn criterion vs Hamiltonicity DP", 600, [] { return from_suites({"gncriterion"}); }},
      {"p_n exact and expansion", 300, [] { return from_suites({"pn"}); }},
      {"calculus", 60, [] { return from_suites({"calculus"}); }},
      {"binomial", 120, [] { return from_suites({"chernoff", "fnsecond", "bindiff"}); }},
      {"balanced cut cover product", 600, [] { return from_suites({"balancedcut"}); }},
      {"constructive builders", 300, [] { return from_suites({"builders"}); }},
      {"Monte Carlo calibration", 60, monte_carlo},
      {"5-regular graphs on 8 vertices", 60, regular_table},
      {"f(alpha) curve artifact", 60, curve_artifact},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.pass && secs < c.budget_seconds;
    failures += !pass;
    std::printf("%s %2zu %s [%.2fs / %.0fs] %s\n", pass ? "PASS" : "FAIL", i + 1, c.label, secs, c.budget_seconds,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
