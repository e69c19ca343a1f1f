#include "cycsub/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "cycsub/errors.hpp"
#include "cycsub/parallel.hpp"
#include "cycsub/rng.hpp"

namespace cycsub {

void AnalysisParams::validate() const {
  if (!(eps > 0 && eps <= 1.0 / 320)) throw PreconditionError("AnalysisParams: eps must lie in (0, 1/320]");
  if (!(gamma <= 0.1)) throw PreconditionError("AnalysisParams: gamma must be at most 1/10");
  if (!(gamma >= 32 * eps)) throw PreconditionError("AnalysisParams: gamma must be at least 32 eps");
}

const char* to_string(Confidence c) { return c == Confidence::exact ? "exact" : "sampled"; }

const char* to_string(CaseKind k) {
  switch (k) {
    case CaseKind::bi_dense: return "bi_dense";
    case CaseKind::two_cliques: return "two_cliques";
    case CaseKind::near_bipartite: return "near_bipartite";
    case CaseKind::unclassified: return "unclassified";
  }
  return "?";
}

namespace {

struct PairScore {
  VertexSet a;
  VertexSet b;
  std::int64_t edges = 0;
};

// The h vertices with the fewest neighbours in `a` (ties to lower index).
PairScore best_response(const Graph& g, const VertexSet& a, int h) {
  const int m = g.order();
  std::vector<std::pair<int, int>> load(m);
  for (int v = 0; v < m; ++v) load[v] = {g.degree_in(v, a), v};
  std::partial_sort(load.begin(), load.begin() + h, load.end());
  PairScore out{a, VertexSet(m), 0};
  for (int i = 0; i < h; ++i) {
    out.b.insert(load[i].second);
    out.edges += load[i].first;
  }
  return out;
}

// Alternates best responses until e(A, B) stops decreasing.
PairScore descend(const Graph& g, PairScore cur, int h) {
  for (int round = 0; round < 64; ++round) {
    PairScore next = best_response(g, cur.b, h);
    std::swap(next.a, next.b);
    if (next.edges >= cur.edges) break;
    cur = std::move(next);
  }
  return cur;
}

VertexSet random_subset(int m, int size, SplitMix64& rng) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle_in_place(perm, rng);
  VertexSet s(m);
  for (int i = 0; i < size; ++i) s.insert(perm[i]);
  return s;
}

// Calls f for every subset of {0..m-1} with exactly `size` members.
template <class F>
void for_each_subset(int m, int size, F&& f) {
  if (size < 0 || size > m) return;
  if (size == 0) {
    f(VertexSet(m));
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (mask < limit) {
    f(VertexSet::from_mask(m, mask));
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

BiDenseResult check_bidense(const Graph& g, double eps, const BiDenseOptions& opts) {
  const int m = g.order();
  const int h = m / 2;  // e(A, B) is monotone, so floor-size half-sets give the minimum
  BiDenseResult res;
  res.threshold = eps * m * m;
  PairScore best{VertexSet(m), VertexSet(m), 0};
  if (opts.exact) {
    if (m > 14) throw PreconditionError("check_bidense: exact mode is limited to 14 vertices");
    res.confidence = Confidence::exact;
    bool first = true;
    for_each_subset(m, h, [&](const VertexSet& a) {
      PairScore s = best_response(g, a, h);
      if (first || s.edges < best.edges) {
        best = std::move(s);
        first = false;
      }
    });
  } else {
    if (opts.samples < 1) throw PreconditionError("check_bidense: need at least one sample");
    res.confidence = Confidence::sampled;
    std::vector<PairScore> found(opts.samples);
    parallel_for(opts.samples, opts.workers, [&](std::int64_t i) {
      SplitMix64 rng = SplitMix64::stream(opts.seed, static_cast<std::uint64_t>(i));
      found[i] = descend(g, best_response(g, random_subset(m, h, rng), h), h);
    });
    best = found[0];
    for (auto& s : found) {
      if (s.edges < best.edges) best = s;
    }
  }
  res.a = std::move(best.a);
  res.b = std::move(best.b);
  res.min_edges = best.edges;
  res.bi_dense = static_cast<double>(res.min_edges) >= res.threshold;
  return res;
}

namespace {

int crossing_min_degree(const Graph& g, const VertexSet& a) {
  const VertexSet abar = a.complement();
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree_in(v, a.contains(v) ? abar : a));
  return best;
}

bool size_in_window(int m, int size, double eps) { return 2 * size >= m && size <= (0.5 + 16 * eps) * m; }

// Flip and swap local search over A within the size window. sign = +1
// minimises e(A, complement), sign = -1 maximises it.
VertexSet local_search(const Graph& g, VertexSet a, double eps, int sign) {
  const int m = g.order();
  const int lo = (m + 1) / 2;
  const int hi = static_cast<int>(std::floor((0.5 + 16 * eps) * m));
  std::vector<int> deg(m), cnt(m);
  for (int v = 0; v < m; ++v) {
    deg[v] = g.degree(v);
    cnt[v] = g.degree_in(v, a);
  }
  int size = a.size();
  // Change of e(A, complement) if v switches sides.
  auto flip_delta = [&](int v) { return a.contains(v) ? 2 * cnt[v] - deg[v] : deg[v] - 2 * cnt[v]; };
  auto apply = [&](int v) {
    const bool in = a.contains(v);
    if (in) {
      a.erase(v);
      --size;
    } else {
      a.insert(v);
      ++size;
    }
    for (int w : g.neighbor_list(v)) cnt[w] += in ? -1 : 1;
  };
  for (int step = 0; step < 4 * m; ++step) {
    int best_v = -1, best_gain = 0;
    for (int v = 0; v < m; ++v) {
      const int next_size = size + (a.contains(v) ? -1 : 1);
      if (next_size < lo || next_size > hi) continue;
      const int gain = -sign * flip_delta(v);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    if (best_v >= 0) {
      apply(best_v);
      continue;
    }
    int bu = -1, bv = -1;
    for (int u = 0; u < m; ++u) {
      if (!a.contains(u)) continue;
      const int du = flip_delta(u);
      for (int v = 0; v < m; ++v) {
        if (a.contains(v)) continue;
        const int gain = -sign * (du + flip_delta(v) + (g.adjacent(u, v) ? 2 : 0));
        if (gain > best_gain) {
          best_gain = gain;
          bu = u;
          bv = v;
        }
      }
    }
    if (bu < 0) break;
    apply(bu);
    apply(bv);
  }
  return a;
}

// Larger side first; equal sides keep the given orientation.
VertexSet larger_side(const VertexSet& a) {
  const VertexSet c = a.complement();
  return a.size() >= c.size() ? a : c;
}

}  // namespace

bool verify_two_cliques(const Graph& g, const VertexSet& a_in, double eps, Classification* out) {
  const int m = g.order();
  const VertexSet a = larger_side(a_in);
  const VertexSet abar = a.complement();
  const std::int64_t cut = g.edges_between(a, abar);
  const int inside = std::min(g.min_degree_in(a), g.min_degree_in(abar));
  if (out) {
    out->a = a;
    out->cut_edges = cut;
    out->inside_min_degree = inside;
    out->crossing_min_degree = crossing_min_degree(g, a);
    out->inside_max_degree_a = g.max_degree_in(a);
  }
  return m > 0 && size_in_window(m, a.size(), eps) && cut <= 6 * eps * m * m && 5 * inside >= m;
}

bool verify_near_bipartite(const Graph& g, const VertexSet& a_in, double eps, double gamma, Classification* out) {
  const int m = g.order();
  const VertexSet a = larger_side(a_in);
  const VertexSet abar = a.complement();
  const std::int64_t cut = g.edges_between(a, abar);
  const int cross_min = crossing_min_degree(g, a);
  const int inside_max = g.max_degree_in(a);
  if (out) {
    out->a = a;
    out->cut_edges = cut;
    out->crossing_min_degree = cross_min;
    out->inside_min_degree = std::min(g.min_degree_in(a), g.min_degree_in(abar));
    out->inside_max_degree_a = inside_max;
  }
  return m > 0 && size_in_window(m, a.size(), eps) && cut >= (0.25 - 14 * eps) * m * m &&
         2.0 * cross_min >= gamma * m && (a.size() == (m + 1) / 2 || inside_max <= gamma * m);
}

Classification classify(const Graph& g, const AnalysisParams& params, const ClassifyOptions& opts) {
  params.validate();
  const int m = g.order();
  if (2 * g.min_degree() < m) throw PreconditionError("classify: minimum degree below m/2");
  Classification out;
  const bool exact = m <= 14;

  std::vector<VertexSet> two_clique_cands;
  std::vector<VertexSet> bipartite_cands;
  BiDenseOptions bd_opts{exact, opts.samples, opts.seed, opts.workers};
  const BiDenseResult bd = check_bidense(g, params.eps, bd_opts);

  if (exact) {
    for (int size = (m + 1) / 2; size_in_window(m, size, params.eps); ++size) {
      for_each_subset(m, size, [&](const VertexSet& a) {
        two_clique_cands.push_back(a);
        bipartite_cands.push_back(a);
      });
    }
  } else {
    std::vector<VertexSet> seeds{bd.a, bd.a.complement(), bd.b, bd.b.complement()};
    for (int r = 0; r < opts.restarts; ++r) {
      SplitMix64 rng = SplitMix64::stream(opts.seed ^ 0x5eedULL, static_cast<std::uint64_t>(r));
      seeds.push_back(random_subset(m, (m + 1) / 2, rng));
    }
    for (auto& s : seeds) {
      // Move into the size window before searching.
      VertexSet start = larger_side(s);
      const int hi = static_cast<int>(std::floor((0.5 + 16 * params.eps) * m));
      for (int v = m - 1; v >= 0 && start.size() > hi; --v) start.erase(v);
      two_clique_cands.push_back(local_search(g, start, params.eps, +1));
      bipartite_cands.push_back(local_search(g, start, params.eps, -1));
    }
  }

  for (const auto& a : two_clique_cands) {
    Classification c;
    if (verify_two_cliques(g, a, params.eps, &c)) {
      c.kind = CaseKind::two_cliques;
      c.confidence = Confidence::exact;
      c.bidense = bd;
      return c;
    }
  }
  if (bd.bi_dense) {
    out.kind = CaseKind::bi_dense;
    out.confidence = bd.confidence;
    out.bidense = bd;
    return out;
  }
  for (const auto& a : bipartite_cands) {
    Classification c;
    if (verify_near_bipartite(g, a, params.eps, params.gamma, &c)) {
      c.kind = CaseKind::near_bipartite;
      c.confidence = Confidence::exact;
      c.bidense = bd;
      return c;
    }
  }
  out.kind = CaseKind::unclassified;
  out.confidence = exact ? Confidence::exact : Confidence::sampled;
  out.bidense = bd;
  return out;
}

namespace {

// Returns n for an (n+1)-regular graph on 2n vertices.
int regular_parameter(const Graph& g, const char* who) {
  const int order = g.order();
  if (order < 2 || order % 2 != 0) throw PreconditionError(std::string(who) + ": order must be 2n");
  const int n = order / 2;
  if (g.min_degree() != n + 1 || g.max_degree() != n + 1) {
    throw PreconditionError(std::string(who) + ": graph is not (n+1)-regular on 2n vertices");
  }
  return n;
}

}  // namespace

CoverProduct balanced_cut_cover_product(const Graph& g, const Cut& cut, const CoverOptions& opts) {
  const int n = regular_parameter(g, "balanced_cut_cover_product");
  if (!cut.is_partition() || !cut.balanced()) {
    throw PreconditionError("balanced_cut_cover_product: cut is not a balanced partition");
  }
  CoverProduct r;
  r.a = min_vertex_cover_exact(g, cut.x, opts).size();
  r.b = min_vertex_cover_exact(g, cut.y, opts).size();
  r.product = std::int64_t{r.a + 1} * (r.b + 1);
  r.holds = r.product >= n + 1;
  return r;
}

Matching cross_matching_floor(const Graph& g, const Cut& cut) {
  const int n = regular_parameter(g, "cross_matching_floor");
  if (!cut.is_partition()) throw PreconditionError("cross_matching_floor: cut is not a partition");
  const double side_floor = std::sqrt(static_cast<double>(n)) / 100;
  if (!(cut.x.size() > side_floor && cut.y.size() > side_floor)) {
    throw PreconditionError("cross_matching_floor: a side has at most sqrt(n)/100 vertices");
  }
  auto km = konig_min_cover(g.bipartite_restriction(cut.x, cut.y), cut.x, cut.y);
  const int need = static_cast<int>(std::ceil(side_floor));
  if (km.matching.size() < need) {
    throw ConstructionFailure("cross_matching_floor: crossing matching of size " +
                              std::to_string(km.matching.size()) + " is below " + std::to_string(need));
  }
  return std::move(km.matching);
}

namespace {

constexpr int kPairingAttempts = 1000;

std::optional<Graph> pairing_attempt(int nv, int d, SplitMix64& rng) {
  std::vector<int> points;
  points.reserve(static_cast<std::size_t>(nv) * d);
  for (int v = 0; v < nv; ++v) points.insert(points.end(), d, v);
  Graph g(nv);
  std::int64_t rejects = 0;
  while (!points.empty()) {
    const std::size_t k = points.size();
    const std::size_t i = rng.below(k);
    std::size_t j = rng.below(k - 1);
    if (j >= i) ++j;
    const int u = points[i], v = points[j];
    if (u == v || g.adjacent(u, v)) {
      if (++rejects > 64 * static_cast<std::int64_t>(k)) return std::nullopt;
      continue;
    }
    g.add_edge(u, v);
    // Remove the larger index first so the smaller stays valid.
    for (std::size_t idx : {std::max(i, j), std::min(i, j)}) {
      points[idx] = points.back();
      points.pop_back();
    }
  }
  return g;
}

}  // namespace

Graph random_regular_graph(int n_vertices, int degree, std::uint64_t seed) {
  if (n_vertices < 1 || degree < 0 || degree >= n_vertices) {
    throw PreconditionError("random_regular_graph: need 0 <= degree < n_vertices");
  }
  if ((static_cast<std::int64_t>(n_vertices) * degree) % 2 != 0) {
    throw PreconditionError("random_regular_graph: degree * n_vertices is odd");
  }
  if (2 * degree > n_vertices - 1) return random_regular_graph(n_vertices, n_vertices - 1 - degree, seed).complement();
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(attempt));
    if (auto g = pairing_attempt(n_vertices, degree, rng)) return std::move(*g);
  }
  throw BudgetExceeded("random_regular_graph: pairing attempts exhausted");
}

}  // namespace cycsub
