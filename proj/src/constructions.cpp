#include "cycsub/constructions.hpp"

#include <numeric>
#include <unordered_map>

#include "cycsub/errors.hpp"
#include "cycsub/iso.hpp"

namespace cycsub {

ExtremalGraph build_extremal(int n, std::span<const int> cycle_lengths) {
  if (n < 2) throw PreconditionError("build_extremal: n must be at least 2");
  int total = 0;
  for (int len : cycle_lengths) {
    if (len < 3) throw PreconditionError("build_extremal: cycle length " + std::to_string(len) + " is below 3");
    total += len;
  }
  if (total != n + 1) {
    throw PreconditionError("build_extremal: cycle lengths sum to " + std::to_string(total) + ", expected " +
                            std::to_string(n + 1));
  }
  ExtremalGraph eg;
  eg.n = n;
  eg.graph = Graph(2 * n);
  eg.part_a = VertexSet::range(2 * n, 0, n + 1);
  eg.part_b = VertexSet::range(2 * n, n + 1, 2 * n);
  eg.part_a.for_each([&](int a) { eg.part_b.for_each([&](int b) { eg.graph.add_edge(a, b); }); });
  int next = 0;
  for (int len : cycle_lengths) {
    std::vector<int> cyc(len);
    std::iota(cyc.begin(), cyc.end(), next);
    for (int i = 0; i < len; ++i) eg.graph.add_edge(cyc[i], cyc[(i + 1) % len]);
    eg.cycles.push_back(std::move(cyc));
    next += len;
  }
  return eg;
}

Graph build_knn(int n) {
  if (n < 1) throw PreconditionError("build_knn: n must be at least 1");
  Graph g(2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = n; b < 2 * n; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph build_star_augmented(int n) {
  if (n < 3) throw PreconditionError("build_star_augmented: n must be at least 3");
  Graph g = build_knn(n);
  for (int base : {0, n}) {
    for (int c = base; c < base + 2; ++c) {
      for (int v = base; v < base + n; ++v) {
        if (v != c) g.add_edge(c, v);
      }
    }
  }
  return g;
}

CompetitorGraph build_competitor(int k) {
  if (k < 3) throw PreconditionError("build_competitor: k must be at least 3");
  CompetitorGraph cg;
  cg.k = k;
  cg.n = k * k;
  const int n = cg.n;
  cg.graph = Graph(2 * n);
  cg.left = VertexSet::range(2 * n, 0, n);
  cg.right = VertexSet::range(2 * n, n, 2 * n);
  cg.centers_left = VertexSet(2 * n);
  cg.centers_right = VertexSet(2 * n);
  for (int j = 0; j < k; ++j) {
    cg.centers_left.insert(j * k);
    cg.centers_right.insert(n + j * k);
    for (int leaf = 1; leaf < k; ++leaf) {
      cg.graph.add_edge(j * k, j * k + leaf);
      cg.graph.add_edge(n + j * k, n + j * k + leaf);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = n; b < 2 * n; ++b) cg.graph.add_edge(a, b);
  }
  // Left centre i misses right centres i+1, ..., i+k-2 (mod k).
  for (int i = 0; i < k; ++i) {
    for (int t = 1; t <= k - 2; ++t) cg.graph.remove_edge(i * k, n + ((i + t) % k) * k);
  }
  return cg;
}

namespace {

// Keeps one graph per isomorphism class.
class IsoPool {
 public:
  bool add(const Graph& g) {
    auto& bucket = buckets_[invariant_hash(g)];
    for (std::size_t idx : bucket) {
      if (isomorphic(graphs_[idx], g)) return false;
    }
    bucket.push_back(graphs_.size());
    graphs_.push_back(g);
    return true;
  }
  std::vector<Graph> take() { return std::move(graphs_); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
  std::vector<Graph> graphs_;
};

// Every way of completing the lowest deficient vertex of g to degree d using
// higher vertices. Isolated vertices are interchangeable, so only the lowest
// ones are offered.
template <class F>
void complete_lowest(Graph& g, int d, F&& emit) {
  const int order = g.order();
  int v = 0;
  while (v < order && g.degree(v) == d) ++v;
  const int need = d - g.degree(v);
  std::vector<int> touched;
  std::vector<int> untouched;
  for (int w = v + 1; w < order; ++w) {
    const int dw = g.degree(w);
    if (dw >= d || g.adjacent(v, w)) continue;
    (dw == 0 ? untouched : touched).push_back(w);
  }
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    const int fresh = need - static_cast<int>(chosen.size());
    if (fresh <= static_cast<int>(untouched.size())) {
      for (int i = 0; i < fresh; ++i) chosen.push_back(untouched[i]);
      for (int w : chosen) g.add_edge(v, w);
      emit(g);
      for (int w : chosen) g.remove_edge(v, w);
      chosen.resize(chosen.size() - fresh);
    }
    if (fresh == 0) return;
    for (std::size_t i = from; i < touched.size(); ++i) {
      chosen.push_back(touched[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

// d-regular graphs on `order` vertices up to isomorphism. Vertices are filled
// one at a time; partial graphs are deduplicated after each step, which is
// sound because degrees tell the finished vertices apart from the rest.
std::vector<Graph> regular_graphs(int order, int d) {
  IsoPool done;
  std::vector<Graph> frontier{Graph(order)};
  while (!frontier.empty()) {
    IsoPool next;
    for (auto& g : frontier) {
      if (g.min_degree() == d) {
        done.add(g);
        continue;
      }
      complete_lowest(g, d, [&](const Graph& h) { next.add(h); });
    }
    frontier = next.take();
  }
  return done.take();
}

}  // namespace

std::vector<Graph> enumerate_regular_complements(int n) {
  if (n < 2 || n > 6) throw PreconditionError("enumerate_regular_complements: n must lie in [2, 6]");
  std::vector<Graph> out;
  for (const auto& h : regular_graphs(2 * n, n - 2)) out.push_back(h.complement());
  return out;
}

std::vector<std::vector<int>> cycle_types(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 3; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, total, total);
  return out;
}

DegreeCheck check_regular(const Graph& g, int degree) {
  DegreeCheck c;
  c.min_degree = g.min_degree();
  c.max_degree = g.max_degree();
  c.ok = c.min_degree == degree && c.max_degree == degree;
  if (!c.ok) c.detail = "graph is not " + std::to_string(degree) + "-regular";
  return c;
}

DegreeCheck check_min_degree(const Graph& g, int degree) {
  DegreeCheck c;
  c.min_degree = g.min_degree();
  c.max_degree = g.max_degree();
  c.ok = c.min_degree >= degree;
  if (!c.ok) c.detail = "minimum degree below " + std::to_string(degree);
  return c;
}

DegreeCheck check_extremal(const ExtremalGraph& eg) {
  DegreeCheck c = check_regular(eg.graph, eg.n + 1);
  auto fail = [&](const std::string& why) {
    c.ok = false;
    if (c.detail.empty()) c.detail = why;
  };
  if (eg.graph.order() != 2 * eg.n) fail("order is not 2n");
  if (eg.part_a.size() - eg.part_b.size() != 2) fail("|partA| - |partB| != 2");
  if (eg.graph.edges_within(eg.part_b) != 0) fail("partB is not independent");
  if (eg.graph.edges_between(eg.part_a, eg.part_b) !=
      static_cast<std::int64_t>(eg.part_a.size()) * eg.part_b.size()) {
    fail("partA x partB is not complete");
  }
  VertexSet covered(eg.graph.order());
  std::int64_t cycle_edges = 0;
  for (const auto& cyc : eg.cycles) {
    const int len = static_cast<int>(cyc.size());
    if (len < 3) fail("cycle shorter than 3");
    for (int i = 0; i < len; ++i) {
      if (covered.contains(cyc[i])) fail("cycles overlap");
      covered.insert(cyc[i]);
      if (!eg.graph.adjacent(cyc[i], cyc[(i + 1) % len])) fail("listed cycle edge missing");
    }
    cycle_edges += len;
  }
  if (covered != eg.part_a) fail("cycles do not span partA");
  if (eg.graph.edges_within(eg.part_a) != cycle_edges) fail("partA has edges outside the 2-factor");
  return c;
}

DegreeCheck check_competitor(const CompetitorGraph& cg) {
  DegreeCheck c = check_regular(cg.graph, cg.n + 1);
  auto fail = [&](const std::string& why) {
    c.ok = false;
    if (c.detail.empty()) c.detail = why;
  };
  if (cg.centers_left.size() != cg.k || cg.centers_right.size() != cg.k) fail("wrong number of centres");
  for (const VertexSet* part : {&cg.left, &cg.right}) {
    if (cg.graph.edges_within(*part) != static_cast<std::int64_t>(cg.k) * (cg.k - 1)) {
      fail("a part is not spanned by k stars of k vertices");
    }
  }
  const std::int64_t centre_cross = cg.graph.edges_between(cg.centers_left, cg.centers_right);
  if (centre_cross != static_cast<std::int64_t>(cg.k) * 2) fail("centre crossing graph is not K_{k,k} minus a (k-2)-factor");
  return c;
}

}  // namespace cycsub
