#pragma once

#include <cstdint>

#include "cycsub/graph.hpp"
#include "cycsub/hamiltonicity.hpp"

namespace cycsub {

// Seeded random instances that satisfy the hypotheses of the constructive
// builders with their default parameters. Every generator re-checks its own
// output and throws ConstructionFailure if it ever leaves the regime.

struct TwoCliquesInstance {
  Graph graph;
  Cut cut;
};

// Two sides of 0.49m..0.51m vertices, each a clique missing at most
// 1e-4 m^2 random edges, joined by a random sparse crossing edge set that
// contains two disjoint edges. Needs m >= 100.
TwoCliquesInstance make_two_cliques_instance(int m, std::uint64_t seed);

struct NearBipartiteInstance {
  Graph graph;
  Cut cut;  // x is the larger side
  LinearForest witness;
};

// Nearly complete bipartite graph with |X| - |Y| <= eps m, a planted linear
// forest of exactly |X| - |Y| edges inside X, sparse random edges inside both
// sides, and a few vertices whose crossing degree sits between gamma m / 3 and
// 0.3 m. Total order is m or m - 1 depending on parity. Needs m >= 100.
NearBipartiteInstance make_near_bipartite_instance(int m, std::uint64_t seed,
                                                   const NearBipartiteParams& params = {});

struct PathInstance {
  Graph graph;
  VertexSet left;   // bipartite instances only
  VertexSet right;  // bipartite instances only
  int a = 0;
  int b = 0;
};

// Minimum degree at least m/2 + 1, random endpoints.
PathInstance make_dirac_path_instance(int m, std::uint64_t seed);

// Balanced sides of m/2 with crossing degrees at least m/4 + 1 plus noise
// edges inside each side; a in left, b in right. m must be even.
PathInstance make_bipartite_path_instance(int m, std::uint64_t seed);

}  // namespace cycsub
