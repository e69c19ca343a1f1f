#pragma once

#include <cstdint>

#include "cycsub/graph.hpp"

namespace cycsub {

// Scans scope in increasing order, matching each free vertex to its
// lowest-index free neighbour.
Matching greedy_maximal_matching(const Graph& g, const VertexSet& scope);

struct KonigResult {
  Matching matching;
  VertexCover cover;
};

// Maximum matching and minimum vertex cover of the bipartite graph g[left, right].
// Throws PreconditionError if left and right overlap or either side spans an edge.
KonigResult konig_min_cover(const Graph& g, const VertexSet& left, const VertexSet& right);

struct CoverOptions {
  std::int64_t node_budget = 10'000'000;
};

// Exact minimum vertex cover of g[scope] by branch and bound (degree-1 and
// triangle reductions, component splitting, matching lower bound). Throws
// BudgetExceeded carrying the best lower/upper bounds when out of nodes.
VertexCover min_vertex_cover_exact(const Graph& g, const VertexSet& scope,
                                   const CoverOptions& opts = {});

// Cover size in units of sqrt(n), i.e. the alpha in |C| = alpha * sqrt(n).
double cover_alpha(const VertexCover& c, int reference_n);

// Maximum linear forest of g[scope] via minimum path cover DP over subsets,
// run per connected component. Throws BudgetExceeded when a component has
// more than max_component vertices.
LinearForest max_linear_forest_exact(const Graph& g, const VertexSet& scope,
                                     int max_component = 20);

// Edge colouring (Misra-Gries, at most Delta+1 colours), colour classes paired
// into path systems, cycles broken, then greedily extended. Returns the best.
LinearForest linear_forest_lower_bound(const Graph& g, const VertexSet& scope);

// floor(e / ceil((1 + slack) * Delta / 2)) for g[scope]; 0 when edgeless.
std::int64_t linear_forest_guarantee(const Graph& g, const VertexSet& scope, double slack = 0.25);

struct GoodCutResult {
  bool good = false;
  // false only when a lower-bound search failed, so "not good" is unproven.
  bool definite = true;
  // Exactly the required number of edges when good.
  LinearForest witness;
};

GoodCutResult is_k_good_cut(const Graph& g, const Cut& cut, int k, bool exact);

struct PruneResult {
  Graph graph;
  std::int64_t deleted = 0;
};

// Bipartite subgraph g[left, right] with every degree cut down to cap by
// deleting, vertex by vertex in index order, the largest-index edges first.
PruneResult prune_to_max_degree(const Graph& g, const VertexSet& left, const VertexSet& right, int cap);

}  // namespace cycsub
