#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// ISA-specific variants selected at runtime. Every variant must produce
// bit-identical output to the scalar reference.

#include <cstdint>
#include <span>

namespace cycsub::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
// Best ISA available on this host and compiled into this binary.
Isa detected_isa();
// ISA used by the dispatching entry points below. Defaults to detected_isa().
Isa active_isa();
// Throws PreconditionError if the ISA is not supported.
void set_active_isa(Isa isa);

// Anchor bit for the Hamiltonian reach table; never a vertex bit (k <= 24).
inline constexpr std::uint32_t kAnchorBit = std::uint32_t{1} << 31;
inline constexpr int kMaxReachVertices = 24;

// Fills the Held-Karp reach table for paths leaving a fixed anchor vertex.
//
// Local vertices are 0..k-1 with k = adj.size() <= 24; adj[v] is the
// neighbourhood of v among local vertices, with kAnchorBit set when v is
// adjacent to the anchor. On return, for every nonempty mask, bit v of
// reach[mask] is set iff there is a path anchor -> ... -> v whose non-anchor
// vertices are exactly mask. reach[0] holds kAnchorBit as the seed.
// reach.size() must be 1 << k.
void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach);

// Sum over v in `select` of |row(v) & target|, for bit-rows laid out back to
// back with `words_per_row` words each. select/target have words_per_row words.
std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target);

namespace scalar {
void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach);
std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target);
}  // namespace scalar

namespace avx2 {
void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach);
std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target);
}  // namespace avx2

}  // namespace cycsub::kernels
