#include <doctest.h>

#include <random>

#include "cycsub/analysis.hpp"
#include "cycsub/constructions.hpp"
#include "cycsub/errors.hpp"
#include "oracles.hpp"

using namespace cycsub;

namespace {

// min over half-set pairs (A, B) of sum_{a in A, b in B} [ab in E].
std::int64_t bidense_brute(const Graph& g) {
  const int m = g.order();
  std::int64_t best = -1;
  for (std::uint32_t a = 0; a < (1U << m); ++a) {
    const int sa = __builtin_popcount(a);
    if (sa != m / 2 && sa != (m + 1) / 2) continue;
    for (std::uint32_t b = 0; b < (1U << m); ++b) {
      const int sb = __builtin_popcount(b);
      if (sb != m / 2 && sb != (m + 1) / 2) continue;
      std::int64_t e = 0;
      for (int u : oracle::members_of(a)) {
        for (int v : oracle::members_of(b)) e += g.adjacent(u, v) ? 1 : 0;
      }
      if (best < 0 || e < best) best = e;
    }
  }
  return best;
}

Graph two_cliques_with_matching(int half) {
  Graph g(2 * half);
  for (int base : {0, half}) {
    for (int i = base; i < base + half; ++i) {
      for (int j = i + 1; j < base + half; ++j) g.add_edge(i, j);
    }
  }
  for (int i = 0; i < half; ++i) g.add_edge(i, half + i);
  return g;
}

void top_up(Graph& g, int target, const VertexSet& pool_of_each, std::mt19937_64& rng, bool cross) {
  const int m = g.order();
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int v = 0; v < m; ++v) {
    while (g.degree(v) < target) {
      const int w = pick(rng);
      if (w == v) continue;
      const bool same = pool_of_each.contains(v) == pool_of_each.contains(w);
      if (same != cross) g.add_edge(v, w);
    }
  }
}

Graph planted_bipartite(int half, std::mt19937_64& rng) {
  Graph g = build_knn(half);
  const auto left = VertexSet::range(2 * half, 0, half);
  // Remove a crossing matching of 8 edges and repair degrees inside the sides.
  std::vector<int> l(half), r(half);
  std::iota(l.begin(), l.end(), 0);
  std::iota(r.begin(), r.end(), half);
  std::shuffle(l.begin(), l.end(), rng);
  std::shuffle(r.begin(), r.end(), rng);
  for (int i = 0; i < 8; ++i) g.remove_edge(l[i], r[i]);
  for (int i = 0; i < 8; i += 2) {
    g.add_edge(l[i], l[i + 1]);
    g.add_edge(r[i], r[i + 1]);
  }
  top_up(g, half, left, rng, false);
  return g;
}

Graph planted_two_cliques(int half, std::mt19937_64& rng) {
  Graph g(2 * half);
  std::bernoulli_distribution keep(0.98);
  for (int base : {0, half}) {
    for (int i = base; i < base + half; ++i) {
      for (int j = i + 1; j < base + half; ++j) {
        if (keep(rng)) g.add_edge(i, j);
      }
    }
  }
  top_up(g, half, VertexSet::range(2 * half, 0, half), rng, true);
  return g;
}

Graph planted_dense(int m, std::mt19937_64& rng) {
  Graph g = oracle::random_graph(m, 0.7, rng);
  top_up(g, (m + 1) / 2, VertexSet::full(m), rng, false);
  return g;
}

}  // namespace

TEST_CASE("parameters") {
  AnalysisParams p;
  CHECK_NOTHROW(p.validate());
  p.eps = 0.01;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p.eps = 1.0 / 320;
  p.gamma = 0.05;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p.gamma = 0.2;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
}

TEST_CASE("bi-dense examples") {
  BiDenseOptions exact{true};
  auto k8 = oracle::complete(8);
  CHECK(check_bidense(k8, 0.1, exact).bi_dense);

  Graph two(8);
  for (int base : {0, 4}) {
    for (int i = base; i < base + 4; ++i) {
      for (int j = i + 1; j < base + 4; ++j) two.add_edge(i, j);
    }
  }
  auto r = check_bidense(two, 1e-6, exact);
  CHECK_FALSE(r.bi_dense);
  CHECK(r.min_edges == 0);
  CHECK(two.edges_between(r.a, r.b) == 0);

  CHECK_FALSE(check_bidense(Graph(6), 0.01, exact).bi_dense);
  CHECK_THROWS_AS(check_bidense(oracle::complete(15), 0.1, exact), PreconditionError);
}

TEST_CASE("bi-dense minimum matches brute force over all pairs") {
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 60; ++rep) {
    const int m = 2 + rep % 7;
    auto g = oracle::random_graph(m, 0.6, rng);
    auto r = check_bidense(g, 0.1, BiDenseOptions{true});
    CHECK(r.min_edges == bidense_brute(g));
    CHECK(g.edges_between(r.a, r.b) == r.min_edges);
  }
}

TEST_CASE("bi-dense exact and sampled agree up to 12 vertices") {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 4 + rep % 9;
    auto g = oracle::random_graph(m, 0.3 + 0.05 * (rep % 10), rng);
    const double eps = 0.02 + 0.01 * (rep % 8);
    auto ex = check_bidense(g, eps, BiDenseOptions{true});
    auto sa = check_bidense(g, eps, BiDenseOptions{false, 256, static_cast<std::uint64_t>(rep), 1});
    CHECK(ex.bi_dense == sa.bi_dense);
    CHECK(sa.min_edges >= ex.min_edges);
  }
}

TEST_CASE("bi-dense sampling is independent of the worker count") {
  std::mt19937_64 rng(17);
  auto g = oracle::random_graph(60, 0.5, rng);
  auto one = check_bidense(g, 0.01, BiDenseOptions{false, 64, 9, 1});
  auto four = check_bidense(g, 0.01, BiDenseOptions{false, 64, 9, 4});
  CHECK(one.min_edges == four.min_edges);
  CHECK(one.a == four.a);
  CHECK(one.b == four.b);
}

TEST_CASE("classification examples") {
  AnalysisParams p;
  auto knn = build_knn(10);
  auto c = classify(knn, p);
  CHECK(c.kind == CaseKind::near_bipartite);
  CHECK((c.a == VertexSet::range(20, 0, 10) || c.a == VertexSet::range(20, 10, 20)));

  auto tc = two_cliques_with_matching(30);
  auto c2 = classify(tc, p);
  CHECK(c2.kind == CaseKind::two_cliques);
  CHECK(c2.cut_edges == 30);

  auto c3 = classify(oracle::complete(20), p);
  CHECK(c3.kind == CaseKind::bi_dense);
  CHECK(c3.confidence == Confidence::sampled);

  auto small = classify(oracle::complete(10), p);
  CHECK(small.kind == CaseKind::bi_dense);
  CHECK(small.confidence == Confidence::exact);

  CHECK_THROWS_AS(classify(oracle::cycle(10), p), PreconditionError);
}

TEST_CASE("classification witnesses satisfy their inequalities") {
  AnalysisParams p;
  const double m = 120;
  std::mt19937_64 rng(18);
  int hits[3] = {0, 0, 0};
  for (int rep = 0; rep < 100; ++rep) {
    const Graph gs[3] = {planted_bipartite(60, rng), planted_two_cliques(60, rng), planted_dense(120, rng)};
    const CaseKind want[3] = {CaseKind::near_bipartite, CaseKind::two_cliques, CaseKind::bi_dense};
    for (int t = 0; t < 3; ++t) {
      ClassifyOptions opts;
      opts.seed = rep;
      auto c = classify(gs[t], p, opts);
      if (c.kind == want[t]) ++hits[t];
      if (c.kind == CaseKind::two_cliques) {
        CHECK(verify_two_cliques(gs[t], c.a, p.eps));
        CHECK(c.cut_edges <= 6 * p.eps * m * m);
        CHECK(2 * c.a.size() >= m);
        CHECK(c.a.size() <= (0.5 + 16 * p.eps) * m);
      }
      if (c.kind == CaseKind::near_bipartite) {
        CHECK(verify_near_bipartite(gs[t], c.a, p.eps, p.gamma));
        CHECK(c.cut_edges >= (0.25 - 14 * p.eps) * m * m);
        CHECK(2.0 * c.crossing_min_degree >= p.gamma * m);
      }
    }
  }
  CHECK(hits[0] >= 95);
  CHECK(hits[1] >= 95);
  CHECK(hits[2] >= 95);
}

TEST_CASE("cover product on small regular graphs") {
  auto k4 = oracle::complete(4);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) != 2) continue;
    auto r = balanced_cut_cover_product(k4, Cut::from_side(VertexSet::from_mask(4, mask)));
    CHECK(r.a == 1);
    CHECK(r.b == 1);
    CHECK(r.product == 4);
    CHECK(r.holds);
  }

  for (const auto& [g, n] : {std::pair{oracle::octahedron(), 3}, std::pair{oracle::cycle(8).complement(), 4}}) {
    int cuts = 0;
    for (std::uint32_t mask = 1; mask < (1U << (2 * n)); mask += 2) {
      if (__builtin_popcount(mask) != n) continue;
      ++cuts;
      const auto x = VertexSet::from_mask(2 * n, mask);
      auto r = balanced_cut_cover_product(g, Cut::from_side(x));
      CHECK(r.holds);
      CHECK(r.product >= n + 1);
      CHECK(r.a == oracle::min_cover_brute(g.restricted_to(x)));
    }
    CHECK(cuts == (n == 3 ? 10 : 35));
  }
  CHECK_THROWS_AS(balanced_cut_cover_product(oracle::cycle(6), Cut::from_side(VertexSet::range(6, 0, 3))),
                  PreconditionError);
  CHECK_THROWS_AS(balanced_cut_cover_product(k4, Cut::from_side(VertexSet::range(4, 0, 1))), PreconditionError);
}

TEST_CASE("crossing matching floor") {
  auto k4 = oracle::complete(4);
  CHECK(cross_matching_floor(k4, Cut::from_side(VertexSet::range(4, 0, 2))).size() == 2);

  std::vector<int> type{101};
  auto eg = build_extremal(100, type);
  VertexSet x = eg.part_a;
  x.erase(0);
  x.insert(150);
  auto mt = cross_matching_floor(eg.graph, Cut::from_side(x));
  CHECK(mt.size() >= 1);
  CHECK(is_valid_matching(eg.graph, mt));

  auto g = random_regular_graph(20, 11, 3);
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 200; ++rep) {
    VertexSet s(20);
    for (int v = 0; v < 20; ++v) {
      if (rng() & 1) s.insert(v);
    }
    if (s.empty() || s.size() == 20) continue;
    CHECK(cross_matching_floor(g, Cut::from_side(s)).size() >= 1);
  }
}

TEST_CASE("random regular graphs") {
  CHECK(random_regular_graph(4, 3, 1) == oracle::complete(4));
  auto g = random_regular_graph(20, 11, 7);
  CHECK(check_regular(g, 11).ok);
  CHECK(random_regular_graph(20, 11, 7) == g);
  CHECK_THROWS_AS(random_regular_graph(5, 3, 1), PreconditionError);
  CHECK_THROWS_AS(random_regular_graph(5, 5, 1), PreconditionError);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + rep % 30;
    const int d = rep % n;
    if ((n * d) % 2 != 0) continue;
    CHECK(check_regular(random_regular_graph(n, d, rep), d).ok);
  }
}
