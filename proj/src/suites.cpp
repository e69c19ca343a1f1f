#include "cycsub/suites.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "cycsub/analysis.hpp"
#include "cycsub/constructions.hpp"
#include "cycsub/counting.hpp"
#include "cycsub/errors.hpp"
#include "cycsub/generators.hpp"
#include "cycsub/hamiltonicity.hpp"
#include "cycsub/numerics.hpp"
#include "cycsub/parallel.hpp"
#include "cycsub/rng.hpp"

namespace cycsub {

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::uint64_t instance_seed(std::uint64_t seed, std::int64_t i) {
  return SplitMix64::stream(seed, static_cast<std::uint64_t>(i)).next();
}

// All size-n subsets of {0..2n-1} containing vertex 0, i.e. every balanced cut once.
std::vector<Cut> all_balanced_cuts(int n) {
  std::vector<Cut> cuts;
  const int m = 2 * n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); mask += 2) {
    if (std::popcount(mask) == n) cuts.push_back(Cut::from_side(VertexSet::from_mask(m, mask)));
  }
  return cuts;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"balancedcut", "chernoff",    "bindiff",    "pn",
                                              "fnsecond",    "calculus",    "gncriterion", "builders"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "balancedcut") return suite_balancedcut(opts);
  if (name == "chernoff") return suite_chernoff(opts);
  if (name == "bindiff") return suite_bindiff(opts);
  if (name == "pn") return suite_pn(opts);
  if (name == "fnsecond") return suite_fnsecond(opts);
  if (name == "calculus") return suite_calculus(opts);
  if (name == "gncriterion") return suite_gncriterion(opts);
  if (name == "builders") return suite_builders(opts);
  throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

// ------------------------------------------------------------ balancedcut

SuiteReport suite_balancedcut(const SuiteOptions& opts) {
  SuiteReport r{"balancedcut", {}};

  SuiteCheck exhaustive{"all balanced cuts of all (n+1)-regular graphs on 2n vertices, n = 2..4", true, {}, {}};
  std::int64_t graphs = 0, cuts = 0, violations = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto all_cuts = all_balanced_cuts(n);
    for (const auto& g : enumerate_regular_complements(n)) {
      ++graphs;
      for (const auto& cut : all_cuts) {
        ++cuts;
        const auto cp = balanced_cut_cover_product(g, cut);
        if (!cp.holds) {
          ++violations;
          if (exhaustive.detail.empty()) {
            exhaustive.detail = "n = " + std::to_string(n) + ": covers " + std::to_string(cp.a) + ", " +
                                std::to_string(cp.b);
          }
        }
      }
    }
  }
  exhaustive.pass = violations == 0;
  exhaustive.values = {{"graphs", static_cast<double>(graphs)},
                       {"cuts", static_cast<double>(cuts)},
                       {"violations", static_cast<double>(violations)}};
  r.checks.push_back(exhaustive);

  const int instances = pick(opts.instances, 200);
  const int n_max = std::max(2, pick(opts.n, 10));
  constexpr int kCutsPerGraph = 100;
  std::vector<std::int64_t> bad(instances, 0);
  parallel_for(instances, opts.workers, [&](std::int64_t i) {
    const int n = 2 + static_cast<int>(i % (n_max - 1));
    const auto seed = instance_seed(opts.seed, i);
    const Graph g = random_regular_graph(2 * n, n + 1, seed);
    auto rng = SplitMix64::stream(seed, 1);
    std::vector<int> perm(2 * n);
    for (int c = 0; c < kCutsPerGraph; ++c) {
      std::iota(perm.begin(), perm.end(), 0);
      shuffle_in_place(perm, rng);
      const Cut cut = Cut::from_side(VertexSet::of(2 * n, std::span<const int>(perm.data(), n)));
      if (!balanced_cut_cover_product(g, cut).holds) ++bad[i];
    }
  });
  const auto random_violations = std::accumulate(bad.begin(), bad.end(), std::int64_t{0});
  r.checks.push_back({"pairing-model (n+1)-regular graphs, 100 random balanced cuts each",
                      random_violations == 0,
                      {{"graphs", static_cast<double>(instances)},
                       {"cuts", static_cast<double>(instances) * kCutsPerGraph},
                       {"max_n", static_cast<double>(n_max)},
                       {"violations", static_cast<double>(random_violations)}},
                      {}});
  return r;
}

// --------------------------------------------------------------- chernoff

SuiteReport suite_chernoff(const SuiteOptions& opts) {
  SuiteReport r{"chernoff", {}};
  r.checks.push_back({"f_4(1) = 93/256 exactly", binom_tail_exact(4, 1) == mpq_class(93, 256), {}, {}});

  const int n_max = pick(opts.n, 200);
  bool all = true;
  double worst = 0;
  std::int64_t worst_n = 0, worst_t = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto c = chernoff_check(n, n);
    all = all && c.holds;
    if (c.worst_ratio > worst) {
      worst = c.worst_ratio;
      worst_n = n;
      worst_t = c.worst_t;
    }
  }
  r.checks.push_back({"f_n(t) <= exp(-t^2/(3n+t)) for 1 <= t <= n <= " + std::to_string(n_max),
                      all,
                      {{"worst_ratio", worst},
                       {"worst_n", static_cast<double>(worst_n)},
                       {"worst_t", static_cast<double>(worst_t)}},
                      {}});
  return r;
}

// ---------------------------------------------------------------- bindiff

SuiteReport suite_bindiff(const SuiteOptions& opts) {
  SuiteReport r{"bindiff", {}};
  for (auto [n, m] : {std::pair{1, 1}, std::pair{3, 5}, std::pair{8, 8}}) {
    const bool ok = bindiff_check(n, m);
    r.checks.push_back({"X + " + std::to_string(m) + " - Y ~ Bin(" + std::to_string(n + m) + ", 1/2) for n = " +
                            std::to_string(n),
                        ok,
                        {{"n", static_cast<double>(n)}, {"m", static_cast<double>(m)}, {"discrepancy", ok ? 0.0 : 1.0}},
                        {}});
  }
  const int grid = pick(opts.n, 24);
  std::int64_t failures = 0;
  for (int n = 0; n <= grid; ++n) {
    for (int m = 0; m <= grid; ++m) failures += bindiff_check(n, m) ? 0 : 1;
  }
  r.checks.push_back({"all 0 <= n, m <= " + std::to_string(grid),
                      failures == 0,
                      {{"pairs", static_cast<double>((grid + 1) * (grid + 1))},
                       {"failures", static_cast<double>(failures)}},
                      {}});
  return r;
}

// --------------------------------------------------------------------- pn

SuiteReport suite_pn(const SuiteOptions& opts) {
  SuiteReport r{"pn", {}};
  std::int64_t members = 0, mismatches = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& type : cycle_types(n + 1)) {
      ++members;
      CountOptions co;
      co.workers = opts.workers;
      const auto counted = cyc_count_exact(build_extremal(n, type).graph, co).p_exact();
      if (p_exact_extremal(n, type) != counted) {
        ++mismatches;
        if (first.empty()) first = "n = " + std::to_string(n) + " disagrees with enumeration";
      }
    }
  }
  r.checks.push_back({"closed form equals enumeration for every family member with n <= 5",
                      mismatches == 0,
                      {{"members", static_cast<double>(members)}, {"mismatches", static_cast<double>(mismatches)}},
                      first});

  const std::vector<std::int64_t> ns{64, 128, 256, 512};
  const auto table = pn_expansion_check(ns);
  SuiteCheck c{"n^{3/2} |p_n - 1/2 - (3/2)/sqrt(n pi)| <= 2 for n in {64, 128, 256, 512}",
               table.max_residual <= 2,
               {},
               {}};
  for (const auto& row : table.rows) {
    c.values.emplace_back("p_" + std::to_string(row.n), row.p);
    c.values.emplace_back("residual_" + std::to_string(row.n), row.scaled_residual);
  }
  c.values.emplace_back("max_residual", table.max_residual);
  c.values.emplace_back("spread", table.spread);
  r.checks.push_back(c);
  return r;
}

// --------------------------------------------------------------- fnsecond

SuiteReport suite_fnsecond(const SuiteOptions& opts) {
  SuiteReport r{"fnsecond", {}};
  std::vector<std::int64_t> ns{10'000, 250'000};
  if (opts.n > 0) ns = {std::max<std::int64_t>(opts.n, 10'000)};
  for (auto n : ns) {
    const auto s = fn_second_estimate_check(n);
    r.checks.push_back({"second tail estimate at n = " + std::to_string(n),
                        s.holds && s.max_ratio <= 1,
                        {{"max_ratio", s.max_ratio}, {"t_range", static_cast<double>(s.t_range)}},
                        {}});
  }
  return r;
}

// --------------------------------------------------------------- calculus

SuiteReport suite_calculus(const SuiteOptions& opts) {
  SuiteReport r{"calculus", {}};
  r.checks.push_back({"g(4) = 0 exactly", g_function(4) == 0, {{"g(4)", g_function(4)}}, {}});

  const double s = 4 * std::sqrt(3.0);
  try {
    const auto roots = g_roots();
    const bool bracket = roots.r1 > 0 && roots.r1 < 8 - s && roots.r3 > 8 + s;
    const double resid = std::max(std::abs(g_function(roots.r1)), std::abs(g_function(roots.r3)));
    r.checks.push_back({"r1 in (0, 8 - 4 sqrt 3), r3 in (8 + 4 sqrt 3, inf), |g| <= 1e-12",
                        bracket && resid <= 1e-12,
                        {{"r1", roots.r1}, {"r2", roots.r2}, {"r3", roots.r3}, {"max_abs_g", resid}},
                        {}});
    r.checks.push_back({"sign of g: + on (0, r1), - on (r1, 4), + on (4, r3), - beyond", roots.sign_pattern_ok,
                        {}, {}});
  } catch (const ConstructionFailure& e) {
    r.checks.push_back({"roots of g", false, {}, e.what()});
  }

  const double f2 = f_alpha(2);
  r.checks.push_back({"f(2) = 0.52050 +- 1e-4 and f(2) > 1/2", std::abs(f2 - 0.52050) <= 1e-4 && f2 > 0.5,
                      {{"f(2)", f2}}, {}});

  const auto curve = emit_f_alpha_curve(0.2, 20, 400);
  bool below_one = true;
  for (const auto& row : curve.rows) below_one = below_one && row.f < 1;
  r.checks.push_back({"grid [0.2, 20]: min f = f(2) +- 1e-3", std::abs(curve.min_f - f2) <= 1e-3,
                      {{"min_f", curve.min_f}, {"argmin_alpha", curve.argmin_alpha}}, {}});
  r.checks.push_back({"grid [0.2, 20]: every value in (1/2, 1)", curve.above_half && below_one,
                      {{"points", static_cast<double>(curve.rows.size())}}, {}});
  r.checks.push_back({"grid [0.2, 20]: increase, decrease, increase, decrease", curve.pattern_ok, {}, {}});
  const double f1 = f_alpha(1);
  r.checks.push_back({"f(1) >= 0.52", f1 >= 0.52, {{"f(1)", f1}}, {}});

  std::int64_t bad_cells = 0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double a = std::pow(10.0, -1 + 2.0 * i / 99);
      const double b = std::pow(10.0, -1 + 2.0 * j / 99);
      if (!window_m1_m2(a, b).identity_holds) ++bad_cells;
    }
  }
  r.checks.push_back({"window identity on a 100 x 100 grid over [0.1, 10]^2", bad_cells == 0,
                      {{"failures", static_cast<double>(bad_cells)}}, {}});

  auto rng = SplitMix64::stream(opts.seed, 0xca1c);
  double worst = 0;
  for (int k = 0; k < 10'000; ++k) {
    double x[3];
    for (double& v : x) v = -6 + 12 * rng.uniform();
    std::sort(x, x + 3);
    worst = std::max(worst, std::abs(normal_I(x[0], x[1]) + normal_I(x[1], x[2]) - normal_I(x[0], x[2])));
  }
  r.checks.push_back({"I[a,b] + I[b,c] = I[a,c] within 1e-11", worst <= 1e-11, {{"max_error", worst}}, {}});
  return r;
}

// ------------------------------------------------------------ gncriterion

SuiteReport suite_gncriterion(const SuiteOptions& opts) {
  SuiteReport r{"gncriterion", {}};
  std::vector<int> ns{2, 3, 4, 5};
  if (opts.n > 0) ns = {opts.n};
  for (int n : ns) {
    if (n < 2 || n > 11) throw PreconditionError("verify gncriterion: n must lie in [2, 11]");
    const auto types = cycle_types(n + 1);
    const std::uint64_t subsets = std::uint64_t{1} << (2 * n);
    std::vector<std::int64_t> disagreements(types.size(), 0);
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto eg = build_extremal(n, types[t]);
      // Split the subsets into blocks; each block tallies into its own slot.
      const std::int64_t blocks = 64;
      std::vector<std::int64_t> slot(blocks, 0);
      parallel_for(blocks, opts.workers, [&](std::int64_t blk) {
        const std::uint64_t lo = subsets * blk / blocks, hi = subsets * (blk + 1) / blocks;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          const auto s = VertexSet::from_mask(2 * n, mask);
          if (gn_criterion(eg, s) != is_hamiltonian_exact(eg.graph, s).hamiltonian()) ++slot[blk];
        }
      });
      disagreements[t] = std::accumulate(slot.begin(), slot.end(), std::int64_t{0});
    }
    const auto total = std::accumulate(disagreements.begin(), disagreements.end(), std::int64_t{0});
    r.checks.push_back({"criterion agrees with the DP on all subsets, n = " + std::to_string(n),
                        total == 0,
                        {{"cycle_types", static_cast<double>(types.size())},
                         {"agreements", static_cast<double>(subsets * types.size() - total)},
                         {"disagreements", static_cast<double>(total)}},
                        {}});
  }
  return r;
}

// --------------------------------------------------------------- builders

SuiteReport suite_builders(const SuiteOptions& opts) {
  SuiteReport r{"builders", {}};
  const int cycle_instances = pick(opts.instances, 50);
  const int path_instances = 2 * cycle_instances;
  const int m = pick(opts.m, 600);
  constexpr int kPathOrder = 200;

  struct Outcome {
    bool ok = false;
    std::string error;
  };
  auto run = [&](const std::string& name, int count, int order, auto&& attempt) {
    std::vector<Outcome> out(count);
    parallel_for(count, opts.workers, [&](std::int64_t i) {
      try {
        out[i].ok = attempt(instance_seed(opts.seed, i));
        if (!out[i].ok) out[i].error = "certificate rejected or search gave up";
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    });
    SuiteCheck c{name, true, {}, {}};
    std::int64_t ok = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].ok) {
        ++ok;
      } else if (c.detail.empty()) {
        c.detail = "instance " + std::to_string(i) + ": " + out[i].error;
      }
    }
    c.pass = ok == count;
    c.values = {{"m", static_cast<double>(order)},
                {"instances", static_cast<double>(count)},
                {"valid", static_cast<double>(ok)}};
    r.checks.push_back(c);
  };

  run("two-cliques builder", cycle_instances, m, [&](std::uint64_t seed) {
    const auto inst = make_two_cliques_instance(m, seed);
    TwoCliqueParams p;
    p.seed = seed;
    const auto cert = ham_cycle_two_cliques(inst.graph, inst.cut, p);
    return is_valid_ham_cycle(inst.graph, VertexSet::full(inst.graph.order()), cert.order);
  });
  run("near-bipartite builder", cycle_instances, m, [&](std::uint64_t seed) {
    const auto inst = make_near_bipartite_instance(m, seed);
    NearBipartiteParams p;
    p.seed = seed;
    const auto cert = ham_cycle_near_bipartite(inst.graph, inst.cut, inst.witness, p);
    return is_valid_ham_cycle(inst.graph, VertexSet::full(inst.graph.order()), cert.order);
  });
  run("Dirac Hamilton path", path_instances, kPathOrder, [&](std::uint64_t seed) {
    const auto inst = make_dirac_path_instance(kPathOrder, seed);
    const auto path = ham_path_dirac(inst.graph, inst.a, inst.b, seed);
    return path && is_valid_ham_path(inst.graph, VertexSet::full(kPathOrder), *path, inst.a, inst.b);
  });
  run("bipartite Hamilton path", path_instances, kPathOrder, [&](std::uint64_t seed) {
    const auto inst = make_bipartite_path_instance(kPathOrder, seed);
    const auto path = ham_path_bipartite(inst.graph, inst.left, inst.right, inst.a, inst.b, seed);
    if (!path) return false;
    // Validate against the crossing graph so noise edges cannot help.
    const Graph cross = inst.graph.bipartite_restriction(inst.left, inst.right);
    return is_valid_ham_path(cross, VertexSet::full(kPathOrder), *path, inst.a, inst.b);
  });
  return r;
}

}  // namespace cycsub
