#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cycsub/constructions.hpp"
#include "cycsub/counting.hpp"
#include "cycsub/errors.hpp"
#include "oracles.hpp"

using namespace cycsub;

namespace {

// Cyclic subsets by permutation search over every subset.
std::vector<std::uint64_t> brute_histogram(const Graph& g) {
  const int m = g.order();
  std::vector<std::uint64_t> h(m + 1, 0);
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (oracle::hamiltonian_by_permutation(g, oracle::members_of(mask))) ++h[__builtin_popcount(mask)];
  }
  return h;
}

mpq_class ratio(std::uint64_t num, int bits) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  mpz_class nz;
  mpz_set_ui(nz.get_mpz_t(), num);
  mpq_class q(nz, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("named counts") {
  auto k4 = cyc_count_exact(oracle::complete(4));
  CHECK(k4.cyclic_count == 5);
  CHECK(k4.p_exact() == mpq_class(5, 16));
  CHECK(k4.per_size == std::vector<std::uint64_t>{0, 0, 0, 4, 1});
  CHECK(cyc_count_exact(oracle::cycle(5)).cyclic_count == 1);
  auto oct = cyc_count_exact(oracle::octahedron());
  CHECK(oct.cyclic_count == 30);
  CHECK(oct.p_exact() == mpq_class(15, 32));
  CHECK(cyc_count_exact(Graph(0)).cyclic_count == 0);
}

TEST_CASE("counts match brute force") {
  std::mt19937_64 rng(40);
  for (int rep = 0; rep < 40; ++rep) {
    const int m = 3 + rep % 7;
    auto g = oracle::random_graph(m, 0.5, rng);
    auto r = cyc_count_exact(g);
    const auto h = brute_histogram(g);
    CHECK(r.per_size == h);
    std::uint64_t sum = 0;
    for (auto x : h) sum += x;
    CHECK(r.cyclic_count == sum);
    CHECK(r.total_subsets == (std::uint64_t{1} << m));
  }
}

TEST_CASE("counts are invariant under relabelling and monotone in edges") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 4 + rep % 9;
    auto g = oracle::random_graph(m, 0.4, rng);
    const auto base = cyc_count_exact(g).cyclic_count;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(cyc_count_exact(g.relabeled(perm)).cyclic_count == base);
    auto comp = g.complement().edges();
    if (comp.empty()) continue;
    const auto e = comp[rng() % comp.size()];
    g.add_edge(e.u, e.v);
    CHECK(cyc_count_exact(g).cyclic_count >= base);
  }
}

TEST_CASE("count budget and worker independence") {
  CHECK_THROWS_AS(cyc_count_exact(oracle::complete(21)), BudgetExceeded);
  CHECK_THROWS_AS(cyc_count_exact(oracle::complete(5), CountOptions{25, 1}), PreconditionError);
  std::mt19937_64 rng(42);
  auto g = oracle::random_graph(18, 0.3, rng);
  auto one = cyc_count_exact(g, CountOptions{20, 1});
  auto four = cyc_count_exact(g, CountOptions{20, 4});
  CHECK(one.per_size == four.per_size);
  auto forced = cyc_count_exact(oracle::random_graph(21, 0.3, rng), CountOptions{21, 2});
  CHECK(forced.vertices == 21);
}

TEST_CASE("extremal formula equals enumeration") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& type : cycle_types(n + 1)) {
      const auto eg = build_extremal(n, type);
      const auto count = cyc_count_exact(eg.graph);
      CHECK(p_exact_extremal(n, type) == ratio(count.cyclic_count, 2 * n));
    }
  }
  CHECK(p_exact_extremal(3, std::vector<int>{4}) == mpq_class(15, 32));
  CHECK(p_exact_extremal(2, std::vector<int>{3}) == mpq_class(5, 16));
  CHECK_THROWS_AS(p_exact_extremal(3, std::vector<int>{3}), PreconditionError);
  CHECK_THROWS_AS(p_exact_extremal(1001, std::vector<int>{1002}), PreconditionError);
  // Large n stays fast and close to one half.
  CHECK(std::abs(p_exact_extremal(1000, std::vector<int>{1001}).get_d() - 0.5) < 0.05);
  std::vector<int> triangles(333, 3);
  triangles.back() = 5;
  CHECK(std::abs(p_exact_extremal(1000, triangles).get_d() - 0.5) < 0.05);
}

TEST_CASE("complete bipartite closed form") {
  CHECK(p_exact_knn(1) == 0);
  CHECK(p_exact_knn(3) == mpq_class(5, 32));
  for (int n = 1; n <= 6; ++n) {
    CHECK(p_exact_knn(n) == ratio(cyc_count_exact(build_knn(n)).cyclic_count, 2 * n));
  }
  CHECK_THROWS_AS(p_exact_knn(0), PreconditionError);
}

TEST_CASE("Monte Carlo estimates") {
  auto oct = oracle::octahedron();
  EstimateOptions o;
  o.samples = 100'000;
  o.seed = 1;
  auto r = estimate_h(oct, o);
  const double truth = 15.0 / 32;
  const double se = std::sqrt(truth * (1 - truth) / o.samples);
  CHECK(std::abs(r.p_hat - truth) <= 4 * se);
  CHECK(r.undecided == 0);
  CHECK(r.ci_low <= r.p_hat);
  CHECK(r.p_hat <= r.ci_high);
  CHECK(r.decider == "auto");

  EstimateOptions w = o;
  w.workers = 4;
  auto r4 = estimate_h(oct, w);
  CHECK(r4.successes == r.successes);
  CHECK(r4.ci_low == r.ci_low);

  EstimateOptions zero;
  zero.p_retention = 0;
  zero.samples = 500;
  CHECK(estimate_h(oct, zero).p_hat == 0);

  EstimateOptions one;
  one.p_retention = 1;
  one.samples = 50;
  CHECK(estimate_h(oracle::cycle(5), one).p_hat == 1);

  // Survivors above the DP limit go to the rotation engine.
  auto big = estimate_h(oracle::complete(30), one);
  CHECK(big.p_hat == 1);
  CHECK(big.undecided == 0);
  EstimateOptions ex = one;
  ex.decider = Decider::exact;
  CHECK(estimate_h(oracle::complete(30), ex).undecided_fraction == 1);

  EstimateOptions gn = o;
  gn.decider = Decider::gn;
  CHECK_THROWS_AS(estimate_h(oct, gn), PreconditionError);
  EstimateOptions bad;
  bad.samples = 0;
  CHECK_THROWS_AS(estimate_h(oct, bad), PreconditionError);
}

TEST_CASE("gn and exact deciders agree in distribution") {
  for (const auto& type : cycle_types(5)) {
    const auto eg = build_extremal(4, type);
    const double truth = p_exact_extremal(4, type).get_d();
    const double se = std::sqrt(truth * (1 - truth) / 100'000);
    for (Decider d : {Decider::gn, Decider::exact}) {
      EstimateOptions o;
      o.samples = 100'000;
      o.seed = 7;
      o.decider = d;
      o.labeling = &eg;
      auto r = estimate_h(eg.graph, o);
      CHECK(std::abs(r.p_hat - truth) <= 4 * se);
      CHECK(r.undecided == 0);
    }
  }
}

TEST_CASE("edge concentration") {
  Graph single(2);
  single.add_edge(0, 1);
  auto s = edge_concentration_experiment(single, 100'000, 3);
  CHECK(s.expected == 0.25);
  CHECK(s.mean_within_3se);
  CHECK(s.variance == doctest::Approx(3.0 / 16).epsilon(0.02));

  // Var e(G[S]) = 3e/16 + P2/8 with P2 the number of paths of length two.
  auto exact_variance = [](const Graph& g) {
    double p2 = 0;
    for (int v = 0; v < g.order(); ++v) p2 += 0.5 * g.degree(v) * (g.degree(v) - 1);
    return 3.0 * g.edge_count() / 16 + p2 / 8;
  };
  auto cg = build_competitor(5);
  auto c = edge_concentration_experiment(cg.graph, 10'000, 4, 2);
  const double var5 = exact_variance(cg.graph);
  CHECK(c.mean_within_3se);
  CHECK(c.variance == doctest::Approx(var5).epsilon(0.05));
  // At m = 50 the 0.1 e window is under two standard deviations wide, so
  // only the Chebyshev bound applies.
  const double cheb = var5 / std::pow(0.1 * c.edges, 2);
  CHECK(c.deviation_fraction <= cheb + 4 * std::sqrt(cheb / 10'000));
  auto c1 = edge_concentration_experiment(cg.graph, 10'000, 4, 1);
  CHECK(c1.mean == c.mean);

  auto large = build_competitor(10);
  auto l = edge_concentration_experiment(large.graph, 10'000, 4, 2);
  CHECK(l.mean_within_3se);
  CHECK(l.deviation_fraction <= 0.01);
  CHECK_THROWS_AS(edge_concentration_experiment(Graph(4), 10, 1), PreconditionError);
}

TEST_CASE("good cut probability") {
  const int n = 10;
  auto knn = build_knn(n);
  Cut cut{VertexSet::range(2 * n, 0, n), VertexSet::range(2 * n, n, 2 * n)};
  auto r = good_cut_probability(knn, cut, 0, 20'000, 5);
  const double truth = static_cast<double>(oracle::binomial(2 * n, n)) / std::pow(4.0, n);
  const double se = std::sqrt(truth * (1 - truth) / 20'000);
  CHECK(std::abs(r.p_hat - truth) <= 4 * se);
  CHECK_FALSE(r.lower_bound);

  auto cg = build_competitor(4);
  auto c = good_cut_probability(cg.graph, Cut{cg.left, cg.right}, 0, 10'000, 6, 2);
  CHECK(c.ci_high >= 0.5);
  CHECK(c.p_hat >= 0.5 - 4 * std::sqrt(0.25 / 10'000));

  auto z = good_cut_probability(knn, cut, 2 * n, 2'000, 7);
  CHECK(z.p_hat == 0);
}
