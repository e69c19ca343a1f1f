#include "cycsub/structures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>

#include "cycsub/errors.hpp"

namespace cycsub {

Matching greedy_maximal_matching(const Graph& g, const VertexSet& scope) {
  Matching m;
  VertexSet free_vertices = scope;
  scope.for_each([&](int u) {
    if (!free_vertices.contains(u)) return;
    const int v = (g.neighbors(u) & free_vertices).first();
    if (v < 0) return;
    m.edges.push_back({u, v});
    free_vertices.erase(u);
    free_vertices.erase(v);
  });
  return m;
}

KonigResult konig_min_cover(const Graph& g, const VertexSet& left, const VertexSet& right) {
  if (left.intersects(right)) throw PreconditionError("konig_min_cover: sides overlap");
  if (g.edges_within(left) != 0 || g.edges_within(right) != 0) {
    throw PreconditionError("konig_min_cover: an edge lies inside one side");
  }
  const int n = g.order();
  std::vector<int> mate(n, -1);
  const std::vector<int> lv = left.to_vector();

  // Kuhn's augmenting paths, neighbours tried in index order.
  std::vector<int> stamp(n, -1);
  int round = 0;
  auto augment = [&](auto&& self, int u) -> bool {
    bool done = false;
    const VertexSet nb = g.neighbors(u) & right;
    for (int v : nb.to_vector()) {
      if (stamp[v] == round) continue;
      stamp[v] = round;
      if (mate[v] < 0 || self(self, mate[v])) {
        mate[v] = u;
        mate[u] = v;
        done = true;
        break;
      }
    }
    return done;
  };
  for (int u : lv) {
    ++round;
    augment(augment, u);
  }

  KonigResult out;
  for (int u : lv) {
    if (mate[u] >= 0) out.matching.edges.push_back({u, mate[u]});
  }

  // Z = vertices reachable from free left vertices by alternating paths.
  VertexSet z(n);
  std::vector<int> stack;
  for (int u : lv) {
    if (mate[u] < 0) {
      z.insert(u);
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    (g.neighbors(u) & right).for_each([&](int v) {
      if (z.contains(v)) return;
      z.insert(v);
      const int w = mate[v];
      if (w >= 0 && !z.contains(w)) {
        z.insert(w);
        stack.push_back(w);
      }
    });
  }
  out.cover.vertices = (left - z) | (right & z);
  out.cover.scope = left | right;
  return out;
}

namespace {

struct OutOfNodes {};

std::vector<VertexSet> components_of(const Graph& g, const VertexSet& r) {
  std::vector<VertexSet> comps;
  VertexSet left = r;
  while (!left.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.order());
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next &= r;
      next -= comp;
      frontier = next;
    }
    left -= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

class CoverSolver {
 public:
  CoverSolver(const Graph& g, std::int64_t budget) : g_(g), budget_(budget) {}

  // Minimum cover of g[r] if its size is below ub.
  std::optional<VertexSet> solve(VertexSet r, int ub) {
    if (++nodes_ > budget_) throw OutOfNodes{};
    VertexSet forced(g_.order());
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : r.to_vector()) {
        if (!r.contains(v)) continue;
        const VertexSet nb = g_.neighbors(v) & r;
        const int d = nb.size();
        if (d == 0) {
          r.erase(v);
          changed = true;
        } else if (d == 1) {
          const int u = nb.first();
          forced.insert(u);
          r.erase(u);
          r.erase(v);
          changed = true;
        } else if (d == 2) {
          const auto ab = nb.to_vector();
          if (g_.adjacent(ab[0], ab[1])) {
            forced |= nb;
            r -= nb;
            r.erase(v);
            changed = true;
          }
        }
      }
    }
    const int room = ub - forced.size();
    if (room <= 0) return std::nullopt;
    if (r.empty()) return forced;
    if (greedy_maximal_matching(g_, r).size() >= room) return std::nullopt;

    const auto comps = components_of(g_, r);
    if (comps.size() > 1) {
      std::vector<int> lbs;
      int rest = 0;
      for (const auto& c : comps) {
        lbs.push_back(greedy_maximal_matching(g_, c).size());
        rest += lbs.back();
      }
      int used = 0;
      VertexSet total = forced;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        rest -= lbs[i];
        auto sub = solve(comps[i], room - used - rest);
        if (!sub) return std::nullopt;
        used += sub->size();
        total |= *sub;
      }
      return total;
    }

    int v = -1;
    int best_deg = -1;
    r.for_each([&](int u) {
      const int d = g_.degree_in(u, r);
      if (d > best_deg) {
        best_deg = d;
        v = u;
      }
    });
    std::optional<VertexSet> best;
    int limit = room;
    VertexSet without_v = r;
    without_v.erase(v);
    if (auto with_v = solve(without_v, limit - 1)) {
      with_v->insert(v);
      limit = with_v->size();
      best = std::move(with_v);
    }
    const VertexSet nb = g_.neighbors(v) & r;
    if (auto with_nb = solve(without_v - nb, limit - nb.size())) {
      *with_nb |= nb;
      best = std::move(with_nb);
    }
    if (!best) return std::nullopt;
    return forced | *best;
  }

 private:
  const Graph& g_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

}  // namespace

VertexCover min_vertex_cover_exact(const Graph& g, const VertexSet& scope, const CoverOptions& opts) {
  const auto sub = InducedSubgraph::of(g, scope);
  const Graph& h = sub.graph;
  const VertexSet all = VertexSet::full(h.order());

  const Matching lb = greedy_maximal_matching(h, all);
  VertexSet greedy(h.order());
  for (const auto& e : lb.edges) {
    greedy.insert(e.u);
    greedy.insert(e.v);
  }
  for (int v : greedy.to_vector()) {
    if (h.neighbors(v).is_subset_of(greedy - VertexSet::of(h.order(), {v}))) greedy.erase(v);
  }

  CoverSolver solver(h, opts.node_budget);
  VertexSet best = greedy;
  try {
    if (auto better = solver.solve(all, greedy.size())) best = *better;
  } catch (const OutOfNodes&) {
    throw BudgetExceeded("min_vertex_cover_exact: node budget exhausted", lb.size(), greedy.size());
  }
  return VertexCover{sub.lift(best), scope};
}

double cover_alpha(const VertexCover& c, int reference_n) {
  if (reference_n <= 0) throw PreconditionError("cover_alpha: reference n must be positive");
  return c.size() / std::sqrt(static_cast<double>(reference_n));
}

namespace {

constexpr int kMaxPathCoverVertices = 24;

// Minimum path cover of a connected graph with at most 24 vertices. Layer c
// holds, per vertex subset, the vertices that can end the last path of a
// cover by exactly c paths.
std::vector<Edge> min_path_cover(const Graph& h) {
  const int k = h.order();
  if (k <= 1) return {};
  std::vector<std::uint32_t> adj(k, 0);
  for (int v = 0; v < k; ++v) adj[v] = static_cast<std::uint32_t>(h.neighbors(v).low_word());
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;

  std::vector<std::vector<std::uint32_t>> layers;
  for (int c = 1; c <= k; ++c) {
    std::vector<std::uint32_t> cur(std::size_t{1} << k, 0);
    const std::vector<std::uint32_t>* prev = layers.empty() ? nullptr : &layers.back();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t bits = 0;
      for (std::uint32_t rem = mask; rem != 0; rem &= rem - 1) {
        const int w = std::countr_zero(rem);
        const std::uint32_t rest = mask ^ (std::uint32_t{1} << w);
        if (rest == 0) {
          if (c == 1) bits |= std::uint32_t{1} << w;
        } else if ((cur[rest] & adj[w]) != 0 || (prev != nullptr && (*prev)[rest] != 0)) {
          bits |= std::uint32_t{1} << w;
        }
      }
      cur[mask] = bits;
    }
    const bool done = cur[full] != 0;
    layers.push_back(std::move(cur));
    if (done) break;
  }

  std::vector<Edge> edges;
  std::size_t c = layers.size();
  std::uint32_t mask = full;
  int w = std::countr_zero(layers[c - 1][full]);
  while (true) {
    const std::uint32_t rest = mask ^ (std::uint32_t{1} << w);
    if (rest == 0) break;
    const std::uint32_t same = layers[c - 1][rest] & adj[w];
    if (same != 0) {
      const int v = std::countr_zero(same);
      edges.push_back({std::min(v, w), std::max(v, w)});
      w = v;
    } else {
      --c;
      w = std::countr_zero(layers[c - 1][rest]);
    }
    mask = rest;
  }
  return edges;
}

}  // namespace

LinearForest max_linear_forest_exact(const Graph& g, const VertexSet& scope, int max_component) {
  const auto comps = components_of(g, scope);
  for (const auto& c : comps) {
    if (c.size() > std::min(max_component, kMaxPathCoverVertices)) {
      throw BudgetExceeded("max_linear_forest_exact: component of " + std::to_string(c.size()) +
                               " vertices exceeds budget",
                           linear_forest_lower_bound(g, scope).size(),
                           scope.size() - static_cast<int>(comps.size()));
    }
  }
  LinearForest out;
  for (const auto& c : comps) {
    const auto sub = InducedSubgraph::of(g, c);
    for (const auto& e : min_path_cover(sub.graph)) {
      out.edges.push_back({sub.to_parent[e.u], sub.to_parent[e.v]});
    }
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return out;
}

namespace {

// Misra-Gries edge colouring with colours 0..Delta.
class EdgeColouring {
 public:
  explicit EdgeColouring(const Graph& h)
      : h_(h), k_(h.order()), colours_(h.max_degree() + 1),
        col_(static_cast<std::size_t>(k_) * k_, -1),
        at_(static_cast<std::size_t>(k_) * colours_, -1) {
    for (const auto& e : h.edges()) colour_edge(e.u, e.v);
  }

  int colours() const { return colours_; }
  int get(int u, int v) const { return col_[static_cast<std::size_t>(u) * k_ + v]; }

 private:
  bool is_free(int v, int c) const { return at_[static_cast<std::size_t>(v) * colours_ + c] < 0; }
  int free_colour(int v) const {
    int c = 0;
    while (!is_free(v, c)) ++c;
    return c;
  }
  void set(int u, int v, int c) {
    col_[static_cast<std::size_t>(u) * k_ + v] = c;
    col_[static_cast<std::size_t>(v) * k_ + u] = c;
    at_[static_cast<std::size_t>(u) * colours_ + c] = v;
    at_[static_cast<std::size_t>(v) * colours_ + c] = u;
  }
  void clear(int u, int v) {
    const int c = get(u, v);
    if (c < 0) return;
    col_[static_cast<std::size_t>(u) * k_ + v] = -1;
    col_[static_cast<std::size_t>(v) * k_ + u] = -1;
    at_[static_cast<std::size_t>(u) * colours_ + c] = -1;
    at_[static_cast<std::size_t>(v) * colours_ + c] = -1;
  }

  void colour_edge(int u, int v) {
    std::vector<int> fan{v};
    std::vector<char> in_fan(k_, 0);
    in_fan[v] = 1;
    const auto nb = h_.neighbor_list(u);
    while (true) {
      const int last = fan.back();
      int next = -1;
      for (int x : nb) {
        if (!in_fan[x] && get(u, x) >= 0 && is_free(last, get(u, x))) {
          next = x;
          break;
        }
      }
      if (next < 0) break;
      fan.push_back(next);
      in_fan[next] = 1;
    }
    const int c = free_colour(u);
    const int d = free_colour(fan.back());

    if (c != d) {
      struct Step {
        int a, b, colour;
      };
      std::vector<Step> path;
      int x = u;
      int want = d;
      while (true) {
        const int y = at_[static_cast<std::size_t>(x) * colours_ + want];
        if (y < 0) break;
        path.push_back({x, y, want});
        x = y;
        want = want == d ? c : d;
      }
      for (const auto& s : path) clear(s.a, s.b);
      for (const auto& s : path) set(s.a, s.b, s.colour == d ? c : d);
    }

    std::size_t pick = 0;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0) {
        const int ci = get(u, fan[i]);
        if (ci < 0 || !is_free(fan[i - 1], ci)) break;
      }
      if (is_free(fan[i], d)) {
        pick = i;
        break;
      }
    }
    std::vector<int> shifted;
    for (std::size_t j = 0; j < pick; ++j) shifted.push_back(get(u, fan[j + 1]));
    for (std::size_t j = 1; j <= pick; ++j) clear(u, fan[j]);
    for (std::size_t j = 0; j < pick; ++j) set(u, fan[j], shifted[j]);
    set(u, fan[pick], d);
  }

  const Graph& h_;
  int k_;
  int colours_;
  std::vector<int> col_;
  std::vector<int> at_;
};

class ForestBuilder {
 public:
  explicit ForestBuilder(int k) : deg_(k, 0), parent_(k) { std::iota(parent_.begin(), parent_.end(), 0); }

  bool try_add(int u, int v) {
    if (deg_[u] >= 2 || deg_[v] >= 2) return false;
    const int ru = find(u);
    const int rv = find(v);
    if (ru == rv) return false;
    parent_[ru] = rv;
    ++deg_[u];
    ++deg_[v];
    edges_.push_back({u, v});
    return true;
  }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  std::vector<int> deg_;
  std::vector<int> parent_;
  std::vector<Edge> edges_;
};

}  // namespace

LinearForest linear_forest_lower_bound(const Graph& g, const VertexSet& scope) {
  const auto sub = InducedSubgraph::of(g, scope);
  const Graph& h = sub.graph;
  const auto all_edges = h.edges();
  if (all_edges.empty()) return {};

  const EdgeColouring colouring(h);
  std::vector<Edge> best;
  for (int c0 = 0; c0 < colouring.colours(); c0 += 2) {
    ForestBuilder fb(h.order());
    for (const auto& e : all_edges) {
      const int c = colouring.get(e.u, e.v);
      if (c == c0 || c == c0 + 1) fb.try_add(e.u, e.v);
    }
    for (const auto& e : all_edges) fb.try_add(e.u, e.v);
    if (fb.edges().size() > best.size()) best = fb.edges();
  }
  LinearForest out;
  for (const auto& e : best) out.edges.push_back({sub.to_parent[e.u], sub.to_parent[e.v]});
  return out;
}

std::int64_t linear_forest_guarantee(const Graph& g, const VertexSet& scope, double slack) {
  const std::int64_t e = g.edges_within(scope);
  if (e == 0) return 0;
  const int delta = g.max_degree_in(scope);
  const auto denom = static_cast<std::int64_t>(std::ceil((1.0 + slack) * delta / 2.0 - 1e-12));
  return e / std::max<std::int64_t>(denom, 1);
}

GoodCutResult is_k_good_cut(const Graph& g, const Cut& cut, int k, bool exact) {
  if (!cut.is_partition() || cut.x.universe() != g.order()) {
    throw PreconditionError("is_k_good_cut: cut does not partition the vertex set");
  }
  if (k < 0) throw PreconditionError("is_k_good_cut: k must be nonnegative");
  const int sx = cut.x.size();
  const int sy = cut.y.size();

  std::vector<const VertexSet*> sides;
  if (sx >= sy) sides.push_back(&cut.x);
  if (sy >= sx) sides.push_back(&cut.y);

  GoodCutResult out;
  out.definite = true;
  for (const VertexSet* side : sides) {
    const int need = k + std::abs(sx - sy);
    if (need == 0) {
      out.good = true;
      out.witness = {};
      return out;
    }
    const LinearForest f = exact ? max_linear_forest_exact(g, *side) : linear_forest_lower_bound(g, *side);
    if (f.size() >= need) {
      out.good = true;
      out.definite = true;
      out.witness.edges.assign(f.edges.begin(), f.edges.begin() + need);
      return out;
    }
    if (!exact) out.definite = false;
  }
  return out;
}

PruneResult prune_to_max_degree(const Graph& g, const VertexSet& left, const VertexSet& right, int cap) {
  if (cap < 0) throw PreconditionError("prune_to_max_degree: cap must be nonnegative");
  PruneResult out{g.bipartite_restriction(left, right), 0};
  Graph& h = out.graph;
  for (int v = 0; v < h.order(); ++v) {
    auto nb = h.neighbor_list(v);
    while (static_cast<int>(nb.size()) > cap) {
      h.remove_edge(v, nb.back());
      nb.pop_back();
      ++out.deleted;
    }
  }
  return out;
}

}  // namespace cycsub
