#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cycsub/vertex_set.hpp"

namespace cycsub {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..order()-1. Adjacency is stored as one
// packed bit-row per vertex, so neighbourhood intersection is word-parallel.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (bits_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] >> (v & 63)) & 1U;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }
  // All rows back to back, words_per_row() words each.
  std::span<const std::uint64_t> raw_rows() const { return bits_; }

  VertexSet neighbors(int v) const;
  int degree(int v) const;
  int degree_in(int v, const VertexSet& s) const;  // d(v, S)
  std::vector<int> neighbor_list(int v) const;

  std::int64_t edge_count() const;
  int min_degree() const;
  int max_degree() const;
  // Induced-subgraph degree extremes; scope must be nonempty.
  int min_degree_in(const VertexSet& scope) const;
  int max_degree_in(const VertexSet& scope) const;

  // e(A, B): ordered pairs (a, b) in A x B that are edges, so edges inside
  // A n B are counted twice.
  std::int64_t edges_between(const VertexSet& a, const VertexSet& b) const;
  // e(G[A]).
  std::int64_t edges_within(const VertexSet& a) const;

  std::vector<Edge> edges() const;
  Graph complement() const;
  // Vertex v of the result is perm[v]'s image: result.adjacent(perm[u], perm[v]) == adjacent(u, v).
  Graph relabeled(std::span<const int> perm) const;
  // Only the edges of G[left, right].
  Graph bipartite_restriction(const VertexSet& left, const VertexSet& right) const;
  // Same vertex set, only edges with both ends in scope.
  Graph restricted_to(const VertexSet& scope) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int order_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Compact copy of G[S]; local vertex i corresponds to parent vertex to_parent[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
  std::vector<int> to_local;  // -1 for vertices outside S

  static InducedSubgraph of(const Graph& g, const VertexSet& s);
  VertexSet lift(const VertexSet& local) const;
  VertexSet lower(const VertexSet& parent) const;
  std::vector<int> lift(std::span<const int> local) const;
};

Graph graph_from_edges(int order, std::span<const Edge> edges);

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

struct VertexCover {
  VertexSet vertices;
  std::optional<VertexSet> scope;  // cover of G[scope] when set
  int size() const { return vertices.size(); }
};

// Vertex-disjoint union of paths, given by its edge set.
struct LinearForest {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
  // Paths as vertex sequences, isolated vertices omitted. Requires validity.
  std::vector<std::vector<int>> paths(int order) const;
};

// Cyclic vertex order witnessing a Hamilton cycle of G[S].
struct HamCycleCert {
  std::vector<int> order;
};

bool is_valid_matching(const Graph& g, const Matching& m, const VertexSet* scope = nullptr);
bool is_maximal_matching(const Graph& g, const Matching& m, const VertexSet& scope);
bool is_valid_cover(const Graph& g, const VertexCover& c);
bool is_valid_linear_forest(const Graph& g, const LinearForest& f, const VertexSet* scope = nullptr);
bool is_valid_ham_cycle(const Graph& g, const VertexSet& scope, std::span<const int> order);
bool is_valid_ham_path(const Graph& g, const VertexSet& scope, std::span<const int> order,
                       int from, int to);

}  // namespace cycsub
