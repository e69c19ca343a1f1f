#include "cycsub/hamiltonicity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cycsub/errors.hpp"
#include "cycsub/kernels.hpp"
#include "cycsub/rng.hpp"
#include "cycsub/structures.hpp"

namespace cycsub {

const char* to_string(HamStatus s) {
  switch (s) {
    case HamStatus::hamiltonian: return "hamiltonian";
    case HamStatus::not_hamiltonian: return "not_hamiltonian";
    case HamStatus::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(StabilityWitness::Kind k) {
  switch (k) {
    case StabilityWitness::Kind::hamiltonian: return "hamiltonian";
    case StabilityWitness::Kind::independent_set: return "independent_set";
    case StabilityWitness::Kind::sparse_pair: return "sparse_pair";
    case StabilityWitness::Kind::none: return "none";
  }
  return "?";
}

// ---------------------------------------------------------------- exact DP

namespace {

std::vector<std::uint32_t> local_adjacency(const Graph& g, int anchor, const std::vector<int>& locals) {
  const int k = static_cast<int>(locals.size());
  std::vector<std::uint32_t> adj(k, 0);
  for (int i = 0; i < k; ++i) {
    if (g.adjacent(anchor, locals[i])) adj[i] |= kernels::kAnchorBit;
    for (int j = 0; j < k; ++j) {
      if (i != j && g.adjacent(locals[i], locals[j])) adj[i] |= std::uint32_t{1} << j;
    }
  }
  return adj;
}

}  // namespace

ReachTable build_reach_table(const Graph& g, int anchor, const std::vector<int>& locals) {
  if (static_cast<int>(locals.size()) >= kernels::kMaxReachVertices) {
    throw BudgetExceeded("reach table limited to " + std::to_string(kernels::kMaxReachVertices - 1) +
                         " non-anchor vertices");
  }
  const auto adj = local_adjacency(g, anchor, locals);
  ReachTable t;
  t.reach.assign(std::size_t{1} << locals.size(), 0);
  for (std::size_t i = 0; i < locals.size(); ++i) {
    if (adj[i] & kernels::kAnchorBit) t.anchor_adj |= std::uint32_t{1} << i;
  }
  kernels::ham_reach(adj, t.reach);
  return t;
}

HamDecision is_hamiltonian_exact(const Graph& g, const VertexSet& scope) {
  HamDecision d;
  d.method = "exact_dp";
  const int s = scope.size();
  if (s > kExactHamMaxVertices) {
    throw BudgetExceeded("is_hamiltonian_exact: " + std::to_string(s) + " vertices exceeds the DP budget of " +
                         std::to_string(kExactHamMaxVertices));
  }
  if (s < 3) {
    d.status = HamStatus::not_hamiltonian;
    return d;
  }
  const auto members = scope.to_vector();
  const int anchor = members[0];
  const std::vector<int> locals(members.begin() + 1, members.end());
  const int k = static_cast<int>(locals.size());
  const ReachTable t = build_reach_table(g, anchor, locals);
  d.work = (std::int64_t{1} << k) * k;

  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  const std::uint32_t ends = t.reach[full] & t.anchor_adj;
  if (ends == 0) {
    d.status = HamStatus::not_hamiltonian;
    return d;
  }
  const auto adj = local_adjacency(g, anchor, locals);
  std::vector<int> seq;
  int cur = std::countr_zero(ends);
  std::uint32_t mask = full;
  seq.push_back(cur);
  while (mask != (std::uint32_t{1} << cur)) {
    const std::uint32_t prev = mask ^ (std::uint32_t{1} << cur);
    const std::uint32_t cand = t.reach[prev] & adj[cur] & ~kernels::kAnchorBit;
    cur = std::countr_zero(cand);
    seq.push_back(cur);
    mask = prev;
  }
  d.cert.order.push_back(anchor);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) d.cert.order.push_back(locals[*it]);
  d.status = HamStatus::hamiltonian;
  return d;
}

// ---------------------------------------------------------- rotation engine

namespace {

class RotationEngine {
 public:
  explicit RotationEngine(const Graph& h) : h_(h), k_(h.order()), nbrs_(k_), pos_(k_, -1) {
    for (int v = 0; v < k_; ++v) nbrs_[v] = h.neighbor_list(v);
  }

  std::int64_t work() const { return work_; }

  std::optional<std::vector<int>> attempt(SplitMix64& rng, std::int64_t rotations) {
    path_.clear();
    std::fill(pos_.begin(), pos_.end(), -1);
    const int start = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_)));
    push(start);
    std::int64_t used = 0;
    while (true) {
      ++work_;
      if (extend(rng)) continue;
      reverse_segment(0, path_.size());
      if (extend(rng)) continue;
      if (auto cyc = close()) {
        if (static_cast<int>(cyc->size()) == k_) return cyc;
        if (!reopen(*cyc)) return std::nullopt;
        continue;
      }
      if (used >= rotations) return std::nullopt;
      if (!rotate(rng)) {
        reverse_segment(0, path_.size());
        if (!rotate(rng)) return std::nullopt;
      }
      ++used;
    }
  }

 private:
  void push(int v) {
    pos_[v] = static_cast<int>(path_.size());
    path_.push_back(v);
  }

  void reverse_segment(std::size_t from, std::size_t to) {
    std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(from), path_.begin() + static_cast<std::ptrdiff_t>(to));
    for (std::size_t i = from; i < to; ++i) pos_[path_[i]] = static_cast<int>(i);
  }

  bool extend(SplitMix64& rng) {
    const int end = path_.back();
    outside_.clear();
    for (int w : nbrs_[end]) {
      if (pos_[w] < 0) outside_.push_back(w);
    }
    if (outside_.empty()) return false;
    push(outside_[rng.below(outside_.size())]);
    return true;
  }

  std::optional<std::vector<int>> close() const {
    const std::size_t len = path_.size();
    if (len < 3) return std::nullopt;
    const int first = path_.front();
    const int last = path_.back();
    if (h_.adjacent(first, last)) return path_;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (h_.adjacent(first, path_[i + 1]) && h_.adjacent(last, path_[i])) {
        std::vector<int> cyc(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(i + 1));
        cyc.insert(cyc.end(), path_.rbegin(), path_.rend() - static_cast<std::ptrdiff_t>(i + 1));
        return cyc;
      }
    }
    return std::nullopt;
  }

  // Turns a non-spanning cycle into a longer path through an outside neighbour.
  bool reopen(const std::vector<int>& cyc) {
    const std::size_t len = cyc.size();
    for (std::size_t j = 0; j < len; ++j) {
      for (int w : nbrs_[cyc[j]]) {
        if (pos_[w] >= 0) continue;
        path_.clear();
        push(w);
        for (std::size_t t = 0; t < len; ++t) push(cyc[(j + t) % len]);
        return true;
      }
    }
    return false;
  }

  bool rotate(SplitMix64& rng) {
    const std::size_t len = path_.size();
    if (len < 3) return false;
    const int end = path_.back();
    pivots_.clear();
    for (int w : nbrs_[end]) {
      const int p = pos_[w];
      if (p >= 0 && static_cast<std::size_t>(p) + 2 < len) pivots_.push_back(p);
    }
    if (pivots_.empty()) return false;
    const int p = pivots_[rng.below(pivots_.size())];
    reverse_segment(static_cast<std::size_t>(p) + 1, len);
    work_ += static_cast<std::int64_t>(len - p);
    return true;
  }

  const Graph& h_;
  int k_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> pos_;
  std::vector<int> path_;
  std::vector<int> outside_;
  std::vector<int> pivots_;
  std::int64_t work_ = 0;
};

constexpr int kRotationRestarts = 32;

}  // namespace

std::int64_t default_rotation_budget(int vertices) { return std::int64_t{kRotationRestarts} * 64 * std::max(vertices, 1); }

HamDecision find_ham_cycle_rotation(const Graph& g, const VertexSet& scope, std::int64_t budget,
                                    std::uint64_t seed) {
  HamDecision d;
  d.method = "rotation";
  if (scope.size() < 3) return d;
  const auto sub = InducedSubgraph::of(g, scope);
  RotationEngine engine(sub.graph);
  for (int r = 0; r < kRotationRestarts; ++r) {
    const std::int64_t share = budget / kRotationRestarts + (r < budget % kRotationRestarts ? 1 : 0);
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(r));
    if (auto cyc = engine.attempt(rng, share)) {
      d.status = HamStatus::hamiltonian;
      d.cert.order = sub.lift(*cyc);
      break;
    }
  }
  d.work = engine.work();
  return d;
}

HamDecision decide_hamiltonian(const Graph& g, const VertexSet& scope, std::uint64_t seed) {
  if (scope.size() <= kExactHamMaxVertices) return is_hamiltonian_exact(g, scope);
  return find_ham_cycle_rotation(g, scope, default_rotation_budget(scope.size()), seed);
}

// ------------------------------------------------------ Hamilton paths

namespace {

// Hamilton cycle of g[scope], rotation first and the exact DP as fallback.
std::optional<std::vector<int>> any_ham_cycle(const Graph& g, const VertexSet& scope, std::uint64_t seed) {
  if (scope.size() < 3) return std::nullopt;
  auto d = find_ham_cycle_rotation(g, scope, default_rotation_budget(scope.size()), seed);
  if (!d.hamiltonian() && scope.size() <= kExactHamMaxVertices) d = is_hamiltonian_exact(g, scope);
  if (!d.hamiltonian()) return std::nullopt;
  return d.cert.order;
}

// a, x, ..., y, b where x y is an edge of the cycle, a ~ x and b ~ y.
std::optional<std::vector<int>> splice(const Graph& g, const std::vector<int>& cyc, int a, int b) {
  const std::size_t r = cyc.size();
  for (int dir : {1, -1}) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t j = (i + r + dir) % r;
      if (!g.adjacent(a, cyc[i]) || !g.adjacent(b, cyc[j])) continue;
      std::vector<int> path{a};
      for (std::size_t t = 0; t < r; ++t) path.push_back(cyc[dir == 1 ? (i + r - t) % r : (i + t) % r]);
      path.push_back(b);
      return path;
    }
  }
  return std::nullopt;
}

// Exact Hamilton path a -> b of g[scope] via an extra vertex adjacent to a and b only.
std::optional<std::vector<int>> exact_path(const Graph& g, const VertexSet& scope, int a, int b) {
  if (scope.size() == 1) return std::nullopt;
  if (scope.size() == 2) {
    if (g.adjacent(a, b)) return std::vector<int>{a, b};
    return std::nullopt;
  }
  if (scope.size() + 1 > kExactHamMaxVertices) return std::nullopt;
  const auto sub = InducedSubgraph::of(g, scope);
  const int k = sub.graph.order();
  Graph aux(k + 1);
  for (const auto& e : sub.graph.edges()) aux.add_edge(e.u, e.v);
  const int la = sub.to_local[a];
  const int lb = sub.to_local[b];
  aux.add_edge(k, la);
  aux.add_edge(k, lb);
  const auto d = is_hamiltonian_exact(aux, VertexSet::full(k + 1));
  if (!d.hamiltonian()) return std::nullopt;
  auto order = d.cert.order;
  const auto z = std::find(order.begin(), order.end(), k);
  std::rotate(order.begin(), z, order.end());
  order.erase(order.begin());
  if (order.front() != la) std::reverse(order.begin(), order.end());
  return sub.lift(order);
}

// Delete a and b, find a Hamilton cycle of the rest, splice.
std::optional<std::vector<int>> path_by_splicing(const Graph& g, const VertexSet& scope, int a, int b,
                                                 std::uint64_t seed) {
  VertexSet rest = scope;
  rest.erase(a);
  rest.erase(b);
  if (rest.size() < 3) return exact_path(g, scope, a, b);
  if (auto cyc = any_ham_cycle(g, rest, seed)) {
    if (auto p = splice(g, *cyc, a, b)) return p;
  }
  return exact_path(g, scope, a, b);
}

}  // namespace

std::optional<std::vector<int>> ham_path_dirac(const Graph& g, int a, int b, std::uint64_t seed) {
  return ham_path_dirac(g, VertexSet::full(g.order()), a, b, seed);
}

std::optional<std::vector<int>> ham_path_dirac(const Graph& g, const VertexSet& scope, int a, int b,
                                               std::uint64_t seed) {
  if (a == b) throw PreconditionError("ham_path_dirac: endpoints must be distinct");
  if (!scope.contains(a) || !scope.contains(b)) throw PreconditionError("ham_path_dirac: endpoint outside scope");
  const int m = scope.size();
  if (2 * g.min_degree_in(scope) < m + 2) {
    throw PreconditionError("ham_path_dirac: minimum degree below m/2 + 1");
  }
  auto p = path_by_splicing(g, scope, a, b, seed);
  if (p && !is_valid_ham_path(g, scope, *p, a, b)) {
    throw ConstructionFailure("ham_path_dirac: produced an invalid path");
  }
  return p;
}

std::optional<std::vector<int>> ham_path_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right,
                                                   int a, int b, std::uint64_t seed) {
  if (left.intersects(right)) throw PreconditionError("ham_path_bipartite: sides overlap");
  if (left.size() != right.size()) throw PreconditionError("ham_path_bipartite: sides differ in size");
  const bool a_left = left.contains(a);
  const bool b_right = right.contains(b);
  if (!a_left || !b_right) {
    throw PreconditionError("ham_path_bipartite: a must lie in left and b in right");
  }
  const int m = left.size() + right.size();
  const Graph h = g.bipartite_restriction(left, right);
  const VertexSet scope = left | right;
  if (4 * h.min_degree_in(scope) < m + 4) {
    throw PreconditionError("ham_path_bipartite: crossing minimum degree below m/4 + 1");
  }
  auto p = path_by_splicing(h, scope, a, b, seed);
  if (p && !is_valid_ham_path(h, scope, *p, a, b)) {
    throw ConstructionFailure("ham_path_bipartite: produced an invalid path");
  }
  return p;
}

// ------------------------------------------------------ two near-cliques

namespace {

// Lowest vertex of pool adjacent to both x and y, or -1.
int common_neighbour(const Graph& g, int x, int y, const VertexSet& pool) {
  return (g.neighbors(x) & g.neighbors(y) & pool).first();
}

// Hamilton path a1 -> a2 of g[side] covering the low-degree vertices first.
std::vector<int> two_clique_side(const Graph& g, const VertexSet& side, int a1, int a2, double low_threshold,
                                 std::uint64_t seed) {
  const int n = g.order();
  VertexSet low(n);
  side.for_each([&](int v) {
    if (g.degree_in(v, side) <= low_threshold) low.insert(v);
  });
  VertexSet used(n);
  used.insert(a1);
  used.insert(a2);
  VertexSet high = side - low;

  auto fresh = [&]() { return high - used; };
  auto stuck = [&](const std::string& what) -> ConstructionFailure {
    return ConstructionFailure("ham_cycle_two_cliques: " + what);
  };

  std::vector<int> p1{a1};
  std::vector<int> p2{a2};
  for (auto* p : {&p1, &p2}) {
    const int end = p->back();
    if (!low.contains(end)) continue;
    const int z = (g.neighbors(end) & fresh()).first();
    if (z < 0) throw stuck("no high-degree neighbour for low-degree end " + std::to_string(end));
    p->push_back(z);
    used.insert(z);
  }

  std::vector<std::vector<int>> cherries;
  (low - used).for_each([&](int x) {
    const VertexSet cand = g.neighbors(x) & fresh();
    const auto two = cand.to_vector();
    if (two.size() < 2) throw stuck("no cherry available at low-degree vertex " + std::to_string(x));
    cherries.push_back({two[0], x, two[1]});
    used.insert(x);
    used.insert(two[0]);
    used.insert(two[1]);
  });

  for (const auto& ch : cherries) {
    const int c = common_neighbour(g, p1.back(), ch.front(), fresh());
    if (c < 0) throw stuck("no common neighbour to join a cherry");
    used.insert(c);
    p1.push_back(c);
    p1.insert(p1.end(), ch.begin(), ch.end());
  }

  const int e1 = p1.back();
  const int e2 = p2.back();
  VertexSet rest = side - used;
  rest.insert(e1);
  rest.insert(e2);
  std::optional<std::vector<int>> mid;
  if (2 * g.min_degree_in(rest) >= rest.size() + 2) {
    mid = ham_path_dirac(g, rest, e1, e2, seed);
  }
  if (!mid) mid = path_by_splicing(g, rest, e1, e2, seed);
  if (!mid) throw stuck("remainder has no Hamilton path between the path ends");

  std::vector<int> out(p1.begin(), p1.end() - 1);
  out.insert(out.end(), mid->begin(), mid->end());
  out.insert(out.end(), p2.rbegin() + 1, p2.rend());
  return out;
}

}  // namespace

HamCycleCert ham_cycle_two_cliques(const Graph& g, const Cut& cut, const TwoCliqueParams& params) {
  const int m = g.order();
  if (!cut.is_partition() || cut.x.universe() != m) throw PreconditionError("ham_cycle_two_cliques: not a cut of g");
  const VertexSet& a = cut.x;
  const VertexSet& b = cut.y;
  if (params.check_hypotheses) {
    if (a.size() < params.side_fraction * m || b.size() < params.side_fraction * m) {
      throw PreconditionError("ham_cycle_two_cliques: a side is smaller than side_fraction * m");
    }
    for (const VertexSet* side : {&a, &b}) {
      if (g.min_degree_in(*side) < params.min_degree_fraction * m) {
        throw PreconditionError("ham_cycle_two_cliques: a side has minimum degree below min_degree_fraction * m");
      }
      const std::int64_t s = side->size();
      if (s * (s - 1) / 2 - g.edges_within(*side) > params.nonedge_fraction * m * m) {
        throw PreconditionError("ham_cycle_two_cliques: a side has more than nonedge_fraction * m^2 non-edges");
      }
    }
  }
  // Two disjoint crossing edges: a maximum crossing matching has size >= 2 iff they exist.
  const auto km = konig_min_cover(g.bipartite_restriction(a, b), a, b);
  if (km.matching.size() < 2) throw PreconditionError("ham_cycle_two_cliques: fewer than two disjoint crossing edges");
  const Edge e1 = km.matching.edges[0];
  const Edge e2 = km.matching.edges[1];
  const int a1 = e1.u, b1 = e1.v, a2 = e2.u, b2 = e2.v;

  const double low = params.low_degree_fraction * m;
  const auto path_a = two_clique_side(g, a, a1, a2, low, params.seed);
  const auto path_b = two_clique_side(g, b, b1, b2, low, params.seed + 1);
  HamCycleCert cert;
  cert.order = path_a;
  cert.order.insert(cert.order.end(), path_b.rbegin(), path_b.rend());
  if (!is_valid_ham_cycle(g, VertexSet::full(m), cert.order)) {
    throw ConstructionFailure("ham_cycle_two_cliques: assembled cycle failed validation");
  }
  return cert;
}

// ------------------------------------------------------ near bipartite

HamCycleCert ham_cycle_near_bipartite(const Graph& g, const Cut& cut, const LinearForest& witness,
                                      const NearBipartiteParams& params) {
  const int m = g.order();
  if (!cut.is_partition() || cut.x.universe() != m) {
    throw PreconditionError("ham_cycle_near_bipartite: not a cut of g");
  }
  const VertexSet& x = cut.x;
  const VertexSet& y = cut.y;
  const int diff = x.size() - y.size();
  if (diff < 0) throw PreconditionError("ham_cycle_near_bipartite: requires |Y| <= |X|");
  if (!is_valid_linear_forest(g, witness, &x)) {
    throw PreconditionError("ham_cycle_near_bipartite: witness is not a linear forest in g[X]");
  }
  if (witness.size() != diff) {
    throw PreconditionError("ham_cycle_near_bipartite: witness has " + std::to_string(witness.size()) +
                            " edges, expected |X| - |Y| = " + std::to_string(diff));
  }
  const Graph cross = g.bipartite_restriction(x, y);
  const VertexSet all = VertexSet::full(m);
  if (params.check_hypotheses) {
    if (diff > params.eps * m) throw PreconditionError("ham_cycle_near_bipartite: |X| - |Y| exceeds eps * m");
    if (cross.edge_count() < (0.25 - params.eps) * m * m) {
      throw PreconditionError("ham_cycle_near_bipartite: fewer than (1/4 - eps) m^2 crossing edges");
    }
    if (3.0 * cross.min_degree() < params.gamma * m) {
      throw PreconditionError("ham_cycle_near_bipartite: crossing minimum degree below gamma * m / 3");
    }
  }
  auto stuck = [&](const std::string& what) {
    return ConstructionFailure("ham_cycle_near_bipartite: " + what);
  };

  const double low_threshold = params.low_degree_fraction * m;
  VertexSet low(m);
  all.for_each([&](int v) {
    if (cross.degree(v) <= low_threshold) low.insert(v);
  });

  VertexSet used(m);
  for (const auto& e : witness.edges) {
    used.insert(e.u);
    used.insert(e.v);
  }
  auto fresh = [&]() { return all - used - low; };

  std::vector<std::vector<int>> pieces = witness.paths(m);
  // Low-degree ends of forest paths get one crossing edge to a fresh vertex.
  for (auto& p : pieces) {
    for (int pass = 0; pass < 2; ++pass) {
      if (low.contains(p.back())) {
        const int z = (cross.neighbors(p.back()) & fresh()).first();
        if (z < 0) throw stuck("no fresh neighbour for low-degree forest end " + std::to_string(p.back()));
        p.push_back(z);
        used.insert(z);
      }
      std::reverse(p.begin(), p.end());
    }
  }
  (low - used).for_each([&](int v) {
    const auto cand = (cross.neighbors(v) & fresh()).to_vector();
    if (cand.size() < 2) throw stuck("no cherry available at low-degree vertex " + std::to_string(v));
    pieces.push_back({cand[0], v, cand[1]});
    used.insert(v);
    used.insert(cand[0]);
    used.insert(cand[1]);
  });

  // Merge all pieces into one path with crossing connectors of length 2 or 3.
  std::vector<int> path;
  if (!pieces.empty()) {
    path = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      auto q = pieces[i];
      const int end = path.back();
      const bool same_front = x.contains(end) == x.contains(q.front());
      const bool same_back = x.contains(end) == x.contains(q.back());
      if (!same_front && same_back) std::reverse(q.begin(), q.end());
      const int y0 = q.front();
      if (x.contains(end) == x.contains(y0)) {
        const int c = common_neighbour(cross, end, y0, fresh());
        if (c < 0) throw stuck("no length-2 connector between " + std::to_string(end) + " and " + std::to_string(y0));
        used.insert(c);
        path.push_back(c);
      } else {
        bool joined = false;
        for (int x1 : (cross.neighbors(end) & fresh()).to_vector()) {
          used.insert(x1);
          const int c = common_neighbour(cross, x1, y0, fresh());
          if (c >= 0) {
            used.insert(c);
            path.push_back(x1);
            path.push_back(c);
            joined = true;
            break;
          }
          used.erase(x1);
        }
        if (!joined) {
          throw stuck("no length-3 connector between " + std::to_string(end) + " and " + std::to_string(y0));
        }
      }
      path.insert(path.end(), q.begin(), q.end());
    }
  }

  // Ends a' in X and b' in Y.
  if (path.empty()) {
    const int a0 = x.first();
    const int b0 = (cross.neighbors(a0)).first();
    if (a0 < 0 || b0 < 0) throw stuck("empty crossing graph");
    path = {a0, b0};
    used.insert(a0);
    used.insert(b0);
  } else if (x.contains(path.front()) == x.contains(path.back())) {
    const int z = (cross.neighbors(path.back()) & fresh()).first();
    if (z < 0) throw stuck("cannot fix path ends");
    used.insert(z);
    path.push_back(z);
  }
  if (!x.contains(path.front())) std::reverse(path.begin(), path.end());
  const int a_end = path.front();
  const int b_end = path.back();

  VertexSet rest = all - used;
  rest.insert(a_end);
  rest.insert(b_end);
  const VertexSet rx = rest & x;
  const VertexSet ry = rest & y;
  if (rx.size() != ry.size()) throw stuck("remainder is unbalanced");

  std::optional<std::vector<int>> ham;
  if (rx.size() + ry.size() == 2) {
    if (cross.adjacent(a_end, b_end)) ham = std::vector<int>{a_end, b_end};
  } else {
    const Graph rem = cross.restricted_to(rest);
    if (4 * rem.min_degree_in(rest) >= rest.size() + 4) {
      ham = ham_path_bipartite(cross, rx, ry, a_end, b_end, params.seed);
    }
    if (!ham) ham = path_by_splicing(rem, rest, a_end, b_end, params.seed);
  }
  if (!ham) throw stuck("balanced remainder has no Hamilton path between the path ends");

  HamCycleCert cert;
  cert.order = path;
  // Hamilton path runs a' -> b'; walk it backwards from b' to rejoin a'.
  cert.order.insert(cert.order.end(), ham->rbegin() + 1, ham->rend() - 1);
  if (!is_valid_ham_cycle(g, all, cert.order)) {
    throw ConstructionFailure("ham_cycle_near_bipartite: assembled cycle failed validation");
  }
  return cert;
}

// ------------------------------------------------------ extremal family

bool gn_criterion(const ExtremalGraph& eg, const VertexSet& s) {
  if (s.size() < 3) return false;
  const int t = (s & eg.part_a).size();
  const int b = (s & eg.part_b).size();
  if (b == 0) {
    for (const auto& cyc : eg.cycles) {
      if (static_cast<int>(cyc.size()) != t) continue;
      bool all_in = true;
      for (int v : cyc) all_in = all_in && s.contains(v);
      if (all_in) return true;
    }
    return false;
  }
  const int d = t - b;
  if (d < 0) return false;
  int forest = 0;
  for (const auto& cyc : eg.cycles) {
    const std::size_t len = cyc.size();
    int induced = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (s.contains(cyc[i]) && s.contains(cyc[(i + 1) % len])) ++induced;
    }
    forest += induced == static_cast<int>(len) ? induced - 1 : induced;
  }
  return forest >= d;
}

// ------------------------------------------------------ stability witness

namespace {

template <class F>
bool for_each_subset(const std::vector<int>& pool, int size, F&& f) {
  std::vector<int> idx(size);
  const int n = static_cast<int>(pool.size());
  if (size > n) return false;
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << pool[i];
    if (f(mask)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

StabilityWitness dirac_stability_witness(const Graph& g, double eps) {
  const int m = g.order();
  if (m > 18) throw PreconditionError("dirac_stability_witness: exhaustive search limited to 18 vertices");
  if (g.min_degree() < (0.5 - eps) * m) {
    throw PreconditionError("dirac_stability_witness: minimum degree below (1/2 - eps) m");
  }
  StabilityWitness w;
  const auto d = is_hamiltonian_exact(g, VertexSet::full(m));
  if (d.hamiltonian()) {
    w.kind = StabilityWitness::Kind::hamiltonian;
    w.cert = d.cert;
    return w;
  }
  const int s = static_cast<int>(std::ceil((0.5 - eps) * m - 1e-12));
  std::vector<std::uint64_t> rows(m);
  for (int v = 0; v < m; ++v) rows[v] = g.row(v)[0];
  auto edges_between = [&](std::uint64_t a, std::uint64_t b) {
    int e = 0;
    for (std::uint64_t r = a; r != 0; r &= r - 1) e += std::popcount(rows[std::countr_zero(r)] & b);
    return e;
  };
  std::vector<int> everyone(m);
  for (int v = 0; v < m; ++v) everyone[v] = v;

  std::uint64_t found_a = 0;
  std::uint64_t found_b = 0;
  if (for_each_subset(everyone, s, [&](std::uint64_t a) {
        if (edges_between(a, a) != 0) return false;
        found_a = a;
        return true;
      })) {
    w.kind = StabilityWitness::Kind::independent_set;
    w.a = VertexSet::from_mask(m, found_a);
    return w;
  }
  const bool pair = for_each_subset(everyone, s, [&](std::uint64_t a) {
    std::vector<int> others;
    for (int v = 0; v < m; ++v) {
      if (!((a >> v) & 1)) others.push_back(v);
    }
    return for_each_subset(others, s, [&](std::uint64_t b) {
      if (edges_between(a, b) > m) return false;
      found_a = a;
      found_b = b;
      return true;
    });
  });
  if (pair) {
    w.kind = StabilityWitness::Kind::sparse_pair;
    w.a = VertexSet::from_mask(m, found_a);
    w.b = VertexSet::from_mask(m, found_b);
  }
  return w;
}

}  // namespace cycsub
