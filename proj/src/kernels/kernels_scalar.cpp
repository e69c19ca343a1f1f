#include <bit>

#include "cycsub/kernels.hpp"

namespace cycsub::kernels::scalar {

void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach) {
  const std::uint32_t count = static_cast<std::uint32_t>(reach.size());
  reach[0] = kAnchorBit;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::uint32_t out = 0;
    std::uint32_t rest = mask;
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((reach[mask ^ bit] & adj[static_cast<std::size_t>(v)]) != 0) out |= bit;
    }
    reach[mask] = out;
  }
}

std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target) {
  std::uint64_t total = 0;
  const auto wpr = static_cast<std::size_t>(words_per_row);
  for (std::size_t sw = 0; sw < select.size(); ++sw) {
    std::uint64_t bits = select[sw];
    while (bits != 0) {
      const std::size_t v = sw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t* row = rows.data() + v * wpr;
      for (std::size_t w = 0; w < wpr; ++w) total += static_cast<std::uint64_t>(std::popcount(row[w] & target[w]));
    }
  }
  return total;
}

}  // namespace cycsub::kernels::scalar
