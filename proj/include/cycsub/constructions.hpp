#pragma once

#include <span>
#include <string>
#include <vector>

#include "cycsub/graph.hpp"

namespace cycsub {

// K_{n-1,n+1} plus a 2-factor on the larger side. part_a is 0..n, part_b is
// n+1..2n-1, and the cycles occupy part_a consecutively in the given order.
struct ExtremalGraph {
  int n = 0;
  Graph graph;
  VertexSet part_a;
  VertexSet part_b;
  std::vector<std::vector<int>> cycles;
};

// n = k^2. Left part 0..n-1, right part n..2n-1; star j of a part occupies
// k consecutive indices starting at its centre.
struct CompetitorGraph {
  int k = 0;
  int n = 0;
  Graph graph;
  VertexSet left;
  VertexSet right;
  VertexSet centers_left;
  VertexSet centers_right;
};

struct DegreeCheck {
  bool ok = false;
  int min_degree = 0;
  int max_degree = 0;
  std::string detail;  // first violated property, empty when ok
};

ExtremalGraph build_extremal(int n, std::span<const int> cycle_lengths);
Graph build_knn(int n);
Graph build_star_augmented(int n);
CompetitorGraph build_competitor(int k);

// All (n+1)-regular graphs on 2n vertices up to isomorphism, 2 <= n <= 6,
// obtained as complements of the (n-2)-regular graphs on 2n vertices.
std::vector<Graph> enumerate_regular_complements(int n);

// Partitions of total into parts >= 3, each listed in non-increasing order.
std::vector<std::vector<int>> cycle_types(int total);

DegreeCheck check_extremal(const ExtremalGraph& eg);
DegreeCheck check_competitor(const CompetitorGraph& cg);
DegreeCheck check_regular(const Graph& g, int degree);
DegreeCheck check_min_degree(const Graph& g, int degree);

}  // namespace cycsub
