#include "cycsub/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cycsub/errors.hpp"
#include "cycsub/rng.hpp"

namespace cycsub {

namespace {

std::vector<int> random_permutation(int m, SplitMix64& rng) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle_in_place(perm, rng);
  return perm;
}

VertexSet map_set(const VertexSet& s, const std::vector<int>& perm) {
  VertexSet out(s.universe());
  s.for_each([&](int v) { out.insert(perm[v]); });
  return out;
}

// Complete graph on [begin, end) minus up to `budget` random edges.
void near_clique(Graph& g, int begin, int end, std::int64_t budget, SplitMix64& rng) {
  for (int i = begin; i < end; ++i) {
    for (int j = i + 1; j < end; ++j) g.add_edge(i, j);
  }
  const auto target = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(budget) + 1));
  const auto span = static_cast<std::uint64_t>(end - begin);
  for (std::int64_t k = 0; k < target; ++k) {
    const int u = begin + static_cast<int>(rng.below(span));
    const int v = begin + static_cast<int>(rng.below(span));
    if (u != v) g.remove_edge(u, v);  // repeats only make the count smaller
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw ConstructionFailure(std::string("generator left the regime: ") + what);
}

}  // namespace

TwoCliquesInstance make_two_cliques_instance(int m, std::uint64_t seed) {
  if (m < 100) throw PreconditionError("make_two_cliques_instance: m must be at least 100");
  auto rng = SplitMix64::stream(seed, 0x2c);
  const TwoCliqueParams defaults;
  const int lo = static_cast<int>(std::ceil(defaults.side_fraction * m));
  const int nx = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - 2 * lo + 1)));
  const auto budget = static_cast<std::int64_t>(defaults.nonedge_fraction * m * m);

  Graph g(m);
  near_clique(g, 0, nx, budget, rng);
  near_clique(g, nx, m, budget, rng);
  // Two disjoint crossing edges, then random extra crossing edges.
  const int x1 = static_cast<int>(rng.below(nx));
  const int x2 = (x1 + 1 + static_cast<int>(rng.below(nx - 1))) % nx;
  const int y1 = nx + static_cast<int>(rng.below(m - nx));
  const int y2 = nx + (y1 - nx + 1 + static_cast<int>(rng.below(m - nx - 1))) % (m - nx);
  g.add_edge(x1, y1);
  g.add_edge(x2, y2);
  const auto extra = rng.below(static_cast<std::uint64_t>(m));
  for (std::uint64_t k = 0; k < extra; ++k) {
    g.add_edge(static_cast<int>(rng.below(nx)), nx + static_cast<int>(rng.below(m - nx)));
  }

  const auto perm = random_permutation(m, rng);
  TwoCliquesInstance inst{g.relabeled(perm), {}};
  inst.cut = Cut::from_side(map_set(VertexSet::range(m, 0, nx), perm));

  for (const VertexSet* side : {&inst.cut.x, &inst.cut.y}) {
    const std::int64_t s = side->size();
    require(s >= defaults.side_fraction * m, "side size");
    require(inst.graph.min_degree_in(*side) >= defaults.min_degree_fraction * m, "side minimum degree");
    require(s * (s - 1) / 2 - inst.graph.edges_within(*side) <= budget, "side non-edges");
  }
  return inst;
}

NearBipartiteInstance make_near_bipartite_instance(int m, std::uint64_t seed, const NearBipartiteParams& params) {
  if (m < 100) throw PreconditionError("make_near_bipartite_instance: m must be at least 100");
  auto rng = SplitMix64::stream(seed, 0x4b);
  const int diff = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::floor(params.eps * m)) + 1));
  const int ny = (m - diff) / 2;
  const int nx = ny + diff;
  const int order = nx + ny;

  Graph g(order);
  for (int x = 0; x < nx; ++x) {
    for (int y = nx; y < order; ++y) g.add_edge(x, y);
  }

  // Planted forest: consecutive runs of a shuffled X, paths of 1 to 3 edges.
  std::vector<int> xs(nx);
  std::iota(xs.begin(), xs.end(), 0);
  shuffle_in_place(xs, rng);
  LinearForest forest;
  std::size_t pos = 0;
  while (forest.size() < diff) {
    const int len = std::min<int>(1 + static_cast<int>(rng.below(3)), diff - forest.size());
    for (int i = 0; i < len; ++i) forest.edges.push_back({xs[pos + i], xs[pos + i + 1]});
    pos += len + 1;
  }
  for (const auto& e : forest.edges) g.add_edge(e.u, e.v);

  // Noise inside each side; it never touches the forest's validity.
  for (int k = 0; k < 2 * order; ++k) {
    const bool in_x = rng.below(2) == 0;
    const int base = in_x ? 0 : nx;
    const int span = in_x ? nx : ny;
    const int u = base + static_cast<int>(rng.below(span));
    const int v = base + static_cast<int>(rng.below(span));
    if (u != v) g.add_edge(u, v);
  }

  // A few low crossing-degree vertices on each side.
  const int floor_deg = static_cast<int>(std::ceil(params.gamma * order / 3.0));
  const int low_cap = static_cast<int>(std::floor(params.low_degree_fraction * order));
  for (int side = 0; side < 2; ++side) {
    const int count = 1 + static_cast<int>(rng.below(3));
    for (int c = 0; c < count; ++c) {
      const int v = side == 0 ? static_cast<int>(rng.below(nx)) : nx + static_cast<int>(rng.below(ny));
      std::vector<int> others;
      for (int w = side == 0 ? nx : 0; w < (side == 0 ? order : nx); ++w) {
        if (g.adjacent(v, w)) others.push_back(w);
      }
      shuffle_in_place(others, rng);
      const int keep = floor_deg + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(low_cap - floor_deg - 1)));
      for (std::size_t i = static_cast<std::size_t>(keep); i < others.size(); ++i) {
        // Do not push the other endpoint down to the floor.
        if (g.degree_in(others[i], side == 0 ? VertexSet::range(order, 0, nx) : VertexSet::range(order, nx, order)) >
            floor_deg + 1) {
          g.remove_edge(v, others[i]);
        }
      }
    }
  }

  // Random crossing deletions away from the degree floor.
  const auto removals = rng.below(static_cast<std::uint64_t>(order));
  const VertexSet xset = VertexSet::range(order, 0, nx);
  const VertexSet yset = VertexSet::range(order, nx, order);
  for (std::uint64_t k = 0; k < removals; ++k) {
    const int x = static_cast<int>(rng.below(nx));
    const int y = nx + static_cast<int>(rng.below(ny));
    if (g.adjacent(x, y) && g.degree_in(x, yset) > low_cap + 1 && g.degree_in(y, xset) > low_cap + 1) {
      g.remove_edge(x, y);
    }
  }

  const auto perm = random_permutation(order, rng);
  NearBipartiteInstance inst;
  inst.graph = g.relabeled(perm);
  inst.cut = Cut{map_set(xset, perm), map_set(yset, perm)};
  for (const auto& e : forest.edges) inst.witness.edges.push_back({perm[e.u], perm[e.v]});

  const Graph cross = inst.graph.bipartite_restriction(inst.cut.x, inst.cut.y);
  require(cross.edge_count() >= (0.25 - params.eps) * order * order, "crossing edge count");
  require(3.0 * cross.min_degree() >= params.gamma * order, "crossing minimum degree");
  require(is_valid_linear_forest(inst.graph, inst.witness, &inst.cut.x), "witness forest");
  return inst;
}

PathInstance make_dirac_path_instance(int m, std::uint64_t seed) {
  if (m < 4) throw PreconditionError("make_dirac_path_instance: m must be at least 4");
  auto rng = SplitMix64::stream(seed, 0xd1);
  const int need = m / 2 + 1;
  Graph g(m);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (rng.bernoulli(0.45)) g.add_edge(u, v);
    }
  }
  for (int v = 0; v < m; ++v) {
    while (g.degree(v) < need) {
      const int w = static_cast<int>(rng.below(m));
      if (w != v) g.add_edge(v, w);
    }
  }
  PathInstance inst;
  inst.graph = std::move(g);
  inst.a = static_cast<int>(rng.below(m));
  inst.b = (inst.a + 1 + static_cast<int>(rng.below(m - 1))) % m;
  return inst;
}

PathInstance make_bipartite_path_instance(int m, std::uint64_t seed) {
  if (m < 4 || m % 2 != 0) throw PreconditionError("make_bipartite_path_instance: m must be even and at least 4");
  auto rng = SplitMix64::stream(seed, 0xb1);
  const int h = m / 2;
  const int need = m / 4 + 1;
  Graph g(m);
  for (int x = 0; x < h; ++x) {
    for (int y = h; y < m; ++y) {
      if (rng.bernoulli(0.5)) g.add_edge(x, y);
    }
  }
  const VertexSet left = VertexSet::range(m, 0, h);
  const VertexSet right = VertexSet::range(m, h, m);
  for (int v = 0; v < m; ++v) {
    const bool in_left = v < h;
    while (g.degree_in(v, in_left ? right : left) < need) {
      const int w = (in_left ? h : 0) + static_cast<int>(rng.below(h));
      g.add_edge(v, w);
    }
  }
  for (int k = 0; k < m; ++k) {
    const int base = rng.below(2) == 0 ? 0 : h;
    const int u = base + static_cast<int>(rng.below(h));
    const int v = base + static_cast<int>(rng.below(h));
    if (u != v) g.add_edge(u, v);
  }
  PathInstance inst;
  inst.graph = std::move(g);
  inst.left = left;
  inst.right = right;
  inst.a = static_cast<int>(rng.below(h));
  inst.b = h + static_cast<int>(rng.below(h));
  return inst;
}

}  // namespace cycsub
