#pragma once

#include <cstdint>

#include "cycsub/graph.hpp"
#include "cycsub/structures.hpp"

namespace cycsub {

struct AnalysisParams {
  double eps = 1.0 / 320;
  double gamma = 0.1;
  double delta = 1e-3;
  double eta = 1e-2;
  double theta = 0.05;
  double lambda = 1e-3;

  // Throws PreconditionError unless 0 < eps <= 1/320, gamma <= 1/10 and
  // gamma >= 32 eps.
  void validate() const;
};

enum class Confidence { exact, sampled };
const char* to_string(Confidence c);

struct BiDenseOptions {
  bool exact = false;  // exhaustive, m <= 14 only
  int samples = 256;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct BiDenseResult {
  bool bi_dense = false;
  // Half-set pair minimising e(A, B) among those examined.
  VertexSet a;
  VertexSet b;
  std::int64_t min_edges = 0;  // e(A, B), overlap counted twice
  double threshold = 0;        // eps * m^2
  Confidence confidence = Confidence::exact;
};

// For a fixed A the best B is the half-set of vertices with the fewest
// neighbours in A, so only A is enumerated (exact) or sampled and then
// improved by alternating best responses.
BiDenseResult check_bidense(const Graph& g, double eps, const BiDenseOptions& opts = {});

// `unclassified` is returned when no case verifies, which can happen below
// the asymptotic regime.
enum class CaseKind { bi_dense, two_cliques, near_bipartite, unclassified };
const char* to_string(CaseKind k);

struct Classification {
  CaseKind kind = CaseKind::unclassified;
  Confidence confidence = Confidence::exact;
  VertexSet a;  // the witness set for two_cliques / near_bipartite
  std::int64_t cut_edges = 0;       // e(A, complement)
  int crossing_min_degree = 0;      // min degree of G[A, complement]
  int inside_min_degree = 0;        // min over G[A] and G[complement]
  int inside_max_degree_a = 0;      // max degree of G[A]
  BiDenseResult bidense;            // filled when the bi-dense check ran
};

struct ClassifyOptions {
  int samples = 256;
  int restarts = 8;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Verification order: two_cliques, bi_dense, near_bipartite. Requires
// 2 delta(g) >= m.
Classification classify(const Graph& g, const AnalysisParams& params, const ClassifyOptions& opts = {});

// The defining inequalities of the two structured cases, checked exactly for
// a given A.
bool verify_two_cliques(const Graph& g, const VertexSet& a, double eps, Classification* out = nullptr);
bool verify_near_bipartite(const Graph& g, const VertexSet& a, double eps, double gamma,
                           Classification* out = nullptr);

struct CoverProduct {
  int a = 0;  // minimum cover of g[X]
  int b = 0;  // minimum cover of g[Y]
  std::int64_t product = 0;
  bool holds = false;  // (a + 1)(b + 1) >= n + 1
};

// g must be (n+1)-regular on 2n vertices and the cut balanced.
CoverProduct balanced_cut_cover_product(const Graph& g, const Cut& cut, const CoverOptions& opts = {});

// Maximum crossing matching of an (n+1)-regular graph on 2n vertices; throws
// ConstructionFailure if it is smaller than ceil(sqrt(n)/100).
Matching cross_matching_floor(const Graph& g, const Cut& cut);

// Uniform-ish d-regular graph: points are paired one at a time, rejecting
// loops and repeated edges, restarting when stuck. For d > (n-1)/2 the
// complement is sampled instead. Deterministic in seed.
Graph random_regular_graph(int n_vertices, int degree, std::uint64_t seed);

}  // namespace cycsub
