#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cycsub/constructions.hpp"
#include "cycsub/graph.hpp"

namespace cycsub {

struct CycReport {
  int vertices = 0;
  std::uint64_t total_subsets = 0;  // 2^m
  std::uint64_t cyclic_count = 0;
  std::vector<std::uint64_t> per_size;  // index = |S|, length m + 1

  mpq_class p_exact() const;
};

struct CountOptions {
  int max_vertices = 20;  // raise up to kExactHamMaxVertices to force larger runs
  int workers = 1;
};

// Every subset S is charged to its lowest vertex a; one reach table over the
// vertices above a then decides all subsets with that minimum at once.
CycReport cyc_count_exact(const Graph& g, const CountOptions& opts = {});

inline constexpr int kExtremalExactMaxN = 1000;

// Exact p(G) for the family member with the given cycle type, n <= 1000.
mpq_class p_exact_extremal(int n, std::span<const int> cycle_lengths);

// (C(2n, n) - 1 - n^2) / 4^n.
mpq_class p_exact_knn(int n);

enum class Decider { automatic, gn, exact };
const char* to_string(Decider d);

struct EstimateOptions {
  double p_retention = 0.5;
  std::int64_t samples = 10'000;
  std::uint64_t seed = 0;
  int workers = 1;
  Decider decider = Decider::automatic;
  const ExtremalGraph* labeling = nullptr;  // required for Decider::gn
};

struct EstimateReport {
  std::int64_t samples = 0;
  std::int64_t successes = 0;
  std::int64_t undecided = 0;
  std::uint64_t seed = 0;
  double p_retention = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  double std_error = 0;
  double undecided_fraction = 0;
  // good_cut_probability only: some sample fell back to the linear forest
  // lower bound, so p_hat is a lower bound.
  bool lower_bound = false;
  std::string decider;
};

// Samples are processed in fixed blocks and every sample draws from its own
// counter-based stream, so the report does not depend on the worker count.
EstimateReport estimate_h(const Graph& g, const EstimateOptions& opts);

struct EdgeConcentration {
  std::int64_t samples = 0;
  std::int64_t edges = 0;
  double expected = 0;  // e(G)/4
  double mean = 0;
  double variance = 0;  // unbiased sample variance
  double std_error = 0;
  double deviation_fraction = 0;  // |e(G[S]) - e/4| > 0.1 e
  bool mean_within_3se = false;
};

EdgeConcentration edge_concentration_experiment(const Graph& g, std::int64_t samples, std::uint64_t seed,
                                                int workers = 1);

// Probability over S ~ G[1/2] that the induced cut is k-good in G[S]. Exact
// linear forests when the relevant side has at most 20 vertices.
EstimateReport good_cut_probability(const Graph& g, const Cut& cut, int k, std::int64_t samples,
                                    std::uint64_t seed, int workers = 1);

}  // namespace cycsub
