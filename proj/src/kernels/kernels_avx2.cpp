// AVX2 variants. This translation unit is compiled with -mavx2 and must only
// be entered after a runtime CPU check (see dispatch.cpp).

#include <bit>

#include "cycsub/kernels.hpp"

#if defined(CYCSUB_HAVE_AVX2)
#include <immintrin.h>

namespace cycsub::kernels::avx2 {

// Eight consecutive masks share every bit above bit 2, so for v >= 3 the
// predecessors reach[mask ^ (1 << v)] of a block form one contiguous 8-lane
// load. The three low vertices depend on entries inside the same block and
// are patched in afterwards in increasing mask order.
void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach) {
  const auto count = static_cast<std::uint32_t>(reach.size());
  if (count < 8) {
    scalar::ham_reach(adj, reach);
    return;
  }
  const __m256i zero = _mm256_setzero_si256();
  std::uint32_t* table = reach.data();
  for (std::uint32_t base = 0; base < count; base += 8) {
    __m256i out = zero;
    std::uint32_t high = base >> 3;
    while (high != 0) {
      const int v = std::countr_zero(high) + 3;
      high &= high - 1;
      const std::uint32_t bit = std::uint32_t{1} << v;
      const __m256i prev =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + (base ^ bit)));
      const __m256i hit =
          _mm256_and_si256(prev, _mm256_set1_epi32(static_cast<int>(adj[static_cast<std::size_t>(v)])));
      const __m256i miss = _mm256_cmpeq_epi32(hit, zero);
      out = _mm256_or_si256(out, _mm256_andnot_si256(miss, _mm256_set1_epi32(static_cast<int>(bit))));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(table + base), out);
    if (base == 0) table[0] = kAnchorBit;
    for (std::uint32_t j = (base == 0 ? 1U : 0U); j < 8; ++j) {
      const std::uint32_t mask = base + j;
      std::uint32_t add = 0;
      for (int v = 0; v < 3; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << v;
        if ((j & bit) != 0 && (table[mask ^ bit] & adj[static_cast<std::size_t>(v)]) != 0) add |= bit;
      }
      table[mask] |= add;
    }
  }
}

namespace {

inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibbles = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibbles);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibbles);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target) {
  __m256i acc = _mm256_setzero_si256();
  std::uint64_t tail = 0;
  const auto wpr = static_cast<std::size_t>(words_per_row);
  const std::size_t order = wpr == 0 ? 0 : rows.size() / wpr;

  if (wpr == 1) {
    // Single-word rows: four consecutive rows per vector, lanes gated by the
    // corresponding select bits.
    const std::uint64_t sel = select.empty() ? 0 : select[0];
    const __m256i tgt = _mm256_set1_epi64x(static_cast<long long>(target[0]));
    std::size_t v = 0;
    for (; v + 4 <= order; v += 4) {
      const std::uint64_t gate = (sel >> v) & 0xF;
      if (gate == 0) continue;
      const __m256i lanes = _mm256_set_epi64x(
          -static_cast<long long>((gate >> 3) & 1), -static_cast<long long>((gate >> 2) & 1),
          -static_cast<long long>((gate >> 1) & 1), -static_cast<long long>(gate & 1));
      const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + v));
      acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(_mm256_and_si256(r, tgt), lanes)));
    }
    for (; v < order; ++v) {
      if ((sel >> v) & 1) tail += static_cast<std::uint64_t>(std::popcount(rows[v] & target[0]));
    }
    return horizontal_sum(acc) + tail;
  }

  for (std::size_t sw = 0; sw < select.size(); ++sw) {
    std::uint64_t bits = select[sw];
    while (bits != 0) {
      const std::size_t v = sw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      const std::uint64_t* row = rows.data() + v * wpr;
      std::size_t w = 0;
      for (; w + 4 <= wpr; w += 4) {
        const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target.data() + w));
        acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(r, t)));
      }
      for (; w < wpr; ++w) tail += static_cast<std::uint64_t>(std::popcount(row[w] & target[w]));
    }
  }
  return horizontal_sum(acc) + tail;
}

}  // namespace cycsub::kernels::avx2

#else

namespace cycsub::kernels::avx2 {

void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach) {
  scalar::ham_reach(adj, reach);
}

std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target) {
  return scalar::masked_degree_sum(rows, words_per_row, select, target);
}

}  // namespace cycsub::kernels::avx2

#endif
