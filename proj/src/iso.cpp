#include "cycsub/iso.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cycsub {

namespace {

using Cells = std::vector<std::vector<int>>;
using Trace = std::vector<std::int64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xbf58476d1ce4e5b9ULL;
}

std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> out(n);
  std::vector<std::uint64_t> codes;
  for (int u = 0; u < n; ++u) {
    codes.clear();
    const VertexSet nu = g.neighbors(u);
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      const auto common = static_cast<std::uint64_t>((nu & g.neighbors(v)).size());
      codes.push_back((g.adjacent(u, v) ? 1ULL << 32 : 0ULL) | common);
    }
    std::sort(codes.begin(), codes.end());
    std::uint64_t h = mix(0x1234, static_cast<std::uint64_t>(g.degree(u)));
    for (auto c : codes) h = mix(h, c);
    out[u] = h;
  }
  return out;
}

Cells initial_cells(const std::vector<std::uint64_t>& inv) {
  std::map<std::uint64_t, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(inv.size()); ++v) groups[inv[v]].push_back(v);
  Cells cells;
  for (auto& [key, members] : groups) cells.push_back(std::move(members));
  return cells;
}

// Splits cells by neighbour counts into each splitter cell until the
// partition is equitable. The trace records every split so two graphs refined
// in lockstep can be compared.
Trace refine(const Graph& g, Cells& cells) {
  Trace trace;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter(g.order());
      for (int v : cells[s]) splitter.insert(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::map<int, std::vector<int>> by_count;
        for (int v : cells[c]) by_count[g.degree_in(v, splitter)].push_back(v);
        if (by_count.size() < 2) continue;
        trace.push_back(static_cast<std::int64_t>(s));
        trace.push_back(static_cast<std::int64_t>(c));
        Cells replacement;
        for (auto& [count, members] : by_count) {
          trace.push_back(count);
          trace.push_back(static_cast<std::int64_t>(members.size()));
          replacement.push_back(std::move(members));
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
  trace.push_back(-1);
  trace.push_back(static_cast<std::int64_t>(cells.size()));
  return trace;
}

Cells individualize(const Cells& cells, std::size_t c, int v) {
  Cells out;
  out.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i != c) {
      out.push_back(cells[i]);
      continue;
    }
    out.push_back({v});
    std::vector<int> rest;
    for (int w : cells[i]) {
      if (w != v) rest.push_back(w);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

bool search(const Graph& g, const Graph& h, const Cells& cg, const Cells& ch, std::vector<int>& perm) {
  std::size_t target = cg.size();
  for (std::size_t i = 0; i < cg.size(); ++i) {
    if (cg[i].size() > 1 && (target == cg.size() || cg[i].size() < cg[target].size())) target = i;
  }
  if (target == cg.size()) {
    for (std::size_t i = 0; i < cg.size(); ++i) perm[cg[i][0]] = ch[i][0];
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) return false;
      }
    }
    return true;
  }
  Cells next_g = individualize(cg, target, cg[target][0]);
  const Trace tg = refine(g, next_g);
  for (int w : ch[target]) {
    Cells next_h = individualize(ch, target, w);
    const Trace th = refine(h, next_h);
    if (th != tg) continue;
    if (search(g, h, next_g, next_h, perm)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  auto inv = vertex_invariants(g);
  std::sort(inv.begin(), inv.end());
  std::uint64_t h = mix(0xabcdef, static_cast<std::uint64_t>(g.order()));
  h = mix(h, static_cast<std::uint64_t>(g.edge_count()));
  for (auto x : inv) h = mix(h, x);
  return h;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto ig = vertex_invariants(g);
  const auto ih = vertex_invariants(h);
  {
    auto sg = ig;
    auto sh = ih;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
  }
  Cells cg = initial_cells(ig);
  Cells ch = initial_cells(ih);
  if (refine(g, cg) != refine(h, ch)) return std::nullopt;
  std::vector<int> perm(static_cast<std::size_t>(g.order()), -1);
  if (g.order() == 0) return perm;
  if (!search(g, h, cg, ch, perm)) return std::nullopt;
  return perm;
}

std::vector<Graph> dedupe_isomorphic(std::vector<Graph> graphs) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<Graph> out;
  for (auto& g : graphs) {
    auto& bucket = buckets[invariant_hash(g)];
    bool fresh = true;
    for (std::size_t idx : bucket) {
      if (isomorphic(out[idx], g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      bucket.push_back(out.size());
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace cycsub
