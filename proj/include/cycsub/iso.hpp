#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycsub/graph.hpp"

namespace cycsub {

// Isomorphism-invariant 64-bit fingerprint (degree and common-neighbour
// profiles). Equal graphs up to relabeling always hash equal.
std::uint64_t invariant_hash(const Graph& g);

// Individualisation-refinement search. Returns perm with
// h.adjacent(perm[u], perm[v]) == g.adjacent(u, v) for all u, v.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

// Keeps the first representative of every isomorphism class, preserving order.
std::vector<Graph> dedupe_isomorphic(std::vector<Graph> graphs);

}  // namespace cycsub
