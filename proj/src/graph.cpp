#include "cycsub/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cycsub/errors.hpp"
#include "cycsub/kernels.hpp"

namespace cycsub {

Graph::Graph(int order)
    : order_(order),
      words_(words_for(order)),
      bits_(static_cast<std::size_t>(order) * static_cast<std::size_t>(words_for(order)), 0) {
  if (order < 0) throw PreconditionError("graph order must be nonnegative");
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw PreconditionError("self-loops are not allowed");
  bits_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  bits_[row_offset(u) + (static_cast<std::size_t>(v) >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (static_cast<std::size_t>(u) >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

VertexSet Graph::neighbors(int v) const {
  VertexSet s(order_);
  std::ranges::copy(row(v), s.words().begin());
  return s;
}

int Graph::degree(int v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::degree_in(int v, const VertexSet& s) const {
  int d = 0;
  const auto r = row(v);
  const auto sw = s.words();
  for (std::size_t i = 0; i < r.size(); ++i) d += std::popcount(r[i] & sw[i]);
  return d;
}

std::vector<int> Graph::neighbor_list(int v) const { return neighbors(v).to_vector(); }

std::int64_t Graph::edge_count() const {
  std::int64_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total / 2;
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : order_;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree_in(const VertexSet& scope) const {
  int best = order_;
  scope.for_each([&](int v) { best = std::min(best, degree_in(v, scope)); });
  return best;
}

int Graph::max_degree_in(const VertexSet& scope) const {
  int best = 0;
  scope.for_each([&](int v) { best = std::max(best, degree_in(v, scope)); });
  return best;
}

std::int64_t Graph::edges_between(const VertexSet& a, const VertexSet& b) const {
  return static_cast<std::int64_t>(kernels::masked_degree_sum(bits_, words_, a.words(), b.words()));
}

std::int64_t Graph::edges_within(const VertexSet& a) const { return edges_between(a, a) / 2; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    neighbors(u).for_each([&](int v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(order_);
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (!adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph r(order_);
  for (const auto& e : edges()) r.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return r;
}

Graph Graph::bipartite_restriction(const VertexSet& left, const VertexSet& right) const {
  Graph r(order_);
  left.for_each([&](int u) {
    (neighbors(u) & right).for_each([&](int v) { r.add_edge(u, v); });
  });
  return r;
}

Graph Graph::restricted_to(const VertexSet& scope) const {
  Graph r(order_);
  scope.for_each([&](int u) {
    (neighbors(u) & scope).for_each([&](int v) {
      if (u < v) r.add_edge(u, v);
    });
  });
  return r;
}

InducedSubgraph InducedSubgraph::of(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  out.to_local.assign(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) out.to_local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  const int k = static_cast<int>(out.to_parent.size());
  out.graph = Graph(k);
  for (int i = 0; i < k; ++i) {
    (g.neighbors(out.to_parent[static_cast<std::size_t>(i)]) & s).for_each([&](int pv) {
      const int j = out.to_local[static_cast<std::size_t>(pv)];
      if (i < j) out.graph.add_edge(i, j);
    });
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  VertexSet s(static_cast<int>(to_local.size()));
  local.for_each([&](int v) { s.insert(to_parent[static_cast<std::size_t>(v)]); });
  return s;
}

VertexSet InducedSubgraph::lower(const VertexSet& parent) const {
  VertexSet s(static_cast<int>(to_parent.size()));
  parent.for_each([&](int v) {
    const int l = to_local[static_cast<std::size_t>(v)];
    if (l >= 0) s.insert(l);
  });
  return s;
}

std::vector<int> InducedSubgraph::lift(std::span<const int> local) const {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

Graph graph_from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::vector<std::vector<int>> LinearForest::paths(int order) const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(order));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < order; ++v) {
    if (seen[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)].size() != 1) continue;
    std::vector<int> path{v};
    seen[static_cast<std::size_t>(v)] = 1;
    int prev = -1;
    int cur = v;
    while (true) {
      int next = -1;
      for (int w : adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) next = w;
      }
      if (next < 0) break;
      path.push_back(next);
      seen[static_cast<std::size_t>(next)] = 1;
      prev = cur;
      cur = next;
      if (adj[static_cast<std::size_t>(cur)].size() == 1) break;
    }
    out.push_back(std::move(path));
  }
  return out;
}

bool is_valid_matching(const Graph& g, const Matching& m, const VertexSet* scope) {
  VertexSet used(g.order());
  for (const auto& e : m.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) return false;
    if (e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    if (scope != nullptr && (!scope->contains(e.u) || !scope->contains(e.v))) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

bool is_maximal_matching(const Graph& g, const Matching& m, const VertexSet& scope) {
  if (!is_valid_matching(g, m, &scope)) return false;
  VertexSet free_vertices = scope;
  for (const auto& e : m.edges) {
    free_vertices.erase(e.u);
    free_vertices.erase(e.v);
  }
  bool maximal = true;
  free_vertices.for_each([&](int v) {
    if (g.neighbors(v).intersects(free_vertices)) maximal = false;
  });
  return maximal;
}

bool is_valid_cover(const Graph& g, const VertexCover& c) {
  const VertexSet scope = c.scope.value_or(VertexSet::full(g.order()));
  if (!c.vertices.is_subset_of(scope)) return false;
  const VertexSet uncovered = scope - c.vertices;
  bool ok = true;
  uncovered.for_each([&](int v) {
    if (g.neighbors(v).intersects(uncovered)) ok = false;
  });
  return ok;
}

bool is_valid_linear_forest(const Graph& g, const LinearForest& f, const VertexSet* scope) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> deg(n, 0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : f.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order()) return false;
    if (e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    if (scope != nullptr && (!scope->contains(e.u) || !scope->contains(e.v))) return false;
    if (++deg[static_cast<std::size_t>(e.u)] > 2 || ++deg[static_cast<std::size_t>(e.v)] > 2) return false;
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru == rv) return false;  // cycle (or repeated edge)
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

bool is_valid_ham_cycle(const Graph& g, const VertexSet& scope, std::span<const int> order) {
  if (order.size() < 3 || static_cast<int>(order.size()) != scope.size()) return false;
  VertexSet seen(g.order());
  for (int v : order) {
    if (v < 0 || v >= g.order() || !scope.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.adjacent(order[i], order[(i + 1) % order.size()])) return false;
  }
  return true;
}

bool is_valid_ham_path(const Graph& g, const VertexSet& scope, std::span<const int> order,
                       int from, int to) {
  if (order.empty() || static_cast<int>(order.size()) != scope.size()) return false;
  if (order.front() != from || order.back() != to) return false;
  VertexSet seen(g.order());
  for (int v : order) {
    if (v < 0 || v >= g.order() || !scope.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.adjacent(order[i], order[i + 1])) return false;
  }
  return true;
}

}  // namespace cycsub
