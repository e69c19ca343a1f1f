#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycsub/constructions.hpp"
#include "cycsub/graph.hpp"

namespace cycsub {

enum class HamStatus { hamiltonian, not_hamiltonian, unknown };

const char* to_string(HamStatus s);

struct HamDecision {
  HamStatus status = HamStatus::unknown;
  HamCycleCert cert;  // filled iff hamiltonian
  std::string method;
  std::int64_t work = 0;

  bool hamiltonian() const { return status == HamStatus::hamiltonian; }
};

inline constexpr int kExactHamMaxVertices = 24;

// Held-Karp over (subset, endpoint) anchored at the lowest vertex of scope.
// Throws BudgetExceeded above kExactHamMaxVertices.
HamDecision is_hamiltonian_exact(const Graph& g, const VertexSet& scope);

// Reach table for paths from `anchor` through `locals` (at most 23 vertices,
// local index i is locals[i]). Bit v of table[mask] is set iff some path
// anchor -> ... -> locals[v] visits exactly the locals in mask. Also returns
// the local neighbourhood of the anchor.
struct ReachTable {
  std::vector<std::uint32_t> reach;
  std::uint32_t anchor_adj = 0;
};
ReachTable build_reach_table(const Graph& g, int anchor, const std::vector<int>& locals);

// Pósa rotation-extension with up to 32 seeded restarts. Sound but
// incomplete: never reports not_hamiltonian. `budget` is the total number of
// rotations, shared evenly between restarts.
HamDecision find_ham_cycle_rotation(const Graph& g, const VertexSet& scope, std::int64_t budget,
                                    std::uint64_t seed);

// Rotation budget used when callers do not pass one.
std::int64_t default_rotation_budget(int vertices);

// Exact DP up to kExactHamMaxVertices, rotation engine above.
HamDecision decide_hamiltonian(const Graph& g, const VertexSet& scope, std::uint64_t seed = 0);

// Hamilton path from a to b in g (optionally restricted to scope) for
// delta >= m/2 + 1: delete a and b, take a Hamilton cycle of the rest and
// splice a and b onto consecutive cycle vertices. nullopt when the cycle
// engine gives up. Throws PreconditionError on hypothesis violation.
std::optional<std::vector<int>> ham_path_dirac(const Graph& g, int a, int b, std::uint64_t seed = 0);
std::optional<std::vector<int>> ham_path_dirac(const Graph& g, const VertexSet& scope, int a, int b,
                                               std::uint64_t seed = 0);

// Hamilton path a -> b of the bipartite graph g[left, right] with
// |left| = |right| and crossing degrees >= (|left| + |right|)/4 + 1.
std::optional<std::vector<int>> ham_path_bipartite(const Graph& g, const VertexSet& left,
                                                   const VertexSet& right, int a, int b,
                                                   std::uint64_t seed = 0);

struct TwoCliqueParams {
  double side_fraction = 0.49;
  double min_degree_fraction = 0.01;
  double nonedge_fraction = 1e-4;
  double low_degree_fraction = 0.3;
  bool check_hypotheses = true;
  std::uint64_t seed = 0;
};

// Hamilton cycle of g for a cut into two near-cliques joined by two disjoint
// crossing edges. Precondition messages name the failed clause.
HamCycleCert ham_cycle_two_cliques(const Graph& g, const Cut& cut, const TwoCliqueParams& params = {});

struct NearBipartiteParams {
  double eps = 0.01;
  double gamma = 0.3;
  double low_degree_fraction = 0.3;
  bool check_hypotheses = true;
  std::uint64_t seed = 0;
};

// Hamilton cycle of g for a near-balanced dense-crossing cut (X, Y) with
// |Y| <= |X|, given a linear forest in g[X] with exactly |X| - |Y| edges.
HamCycleCert ham_cycle_near_bipartite(const Graph& g, const Cut& cut, const LinearForest& witness,
                                      const NearBipartiteParams& params = {});

// Exact Hamiltonicity of eg.graph[s] in O(|s| + #cycles).
bool gn_criterion(const ExtremalGraph& eg, const VertexSet& s);

struct StabilityWitness {
  enum class Kind { hamiltonian, independent_set, sparse_pair, none };
  Kind kind = Kind::none;
  HamCycleCert cert;
  VertexSet a;
  VertexSet b;
};

const char* to_string(StabilityWitness::Kind k);

// Exhaustive search for m <= 18 vertices: a Hamilton cycle, else an
// independent set of size ceil((1/2 - eps) m), else two disjoint sets of that
// size with at most m edges between them. Kind::none if nothing is found.
StabilityWitness dirac_stability_witness(const Graph& g, double eps);

}  // namespace cycsub
