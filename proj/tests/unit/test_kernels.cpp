#include <random>
#include <vector>

#include "cycsub/errors.hpp"
#include "cycsub/kernels.hpp"
#include "doctest.h"

using namespace cycsub;

namespace {

std::vector<std::uint32_t> random_adjacency(int k, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::uint32_t> adj(k, 0);
  for (int i = 0; i < k; ++i) {
    if (coin(rng)) adj[i] |= kernels::kAnchorBit;
    for (int j = i + 1; j < k; ++j) {
      if (coin(rng)) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  return adj;
}

}  // namespace

TEST_CASE("ham_reach: AVX2 table is bit-identical to the scalar reference") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  std::mt19937_64 rng(11);
  for (int k = 1; k <= 16; ++k) {
    for (double p : {0.2, 0.5, 0.9}) {
      const auto adj = random_adjacency(k, p, rng);
      std::vector<std::uint32_t> a(std::size_t{1} << k), b(std::size_t{1} << k);
      kernels::scalar::ham_reach(adj, a);
      kernels::avx2::ham_reach(adj, b);
      REQUIRE(a == b);
    }
  }
}

TEST_CASE("ham_reach: small known tables") {
  // anchor - 0 - 1 path, anchor adjacent to 0 only.
  std::vector<std::uint32_t> adj{kernels::kAnchorBit | 0b10u, 0b01u};
  std::vector<std::uint32_t> reach(4);
  kernels::scalar::ham_reach(adj, reach);
  CHECK(reach[0] == kernels::kAnchorBit);
  CHECK(reach[0b01] == 0b01u);
  CHECK(reach[0b10] == 0u);
  CHECK(reach[0b11] == 0b10u);
}

TEST_CASE("masked_degree_sum: AVX2 matches scalar for one and several words per row") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  std::mt19937_64 rng(5);
  for (int words : {1, 2, 3, 5}) {
    for (int rows_count : {1, 7, 64, 130}) {
      if (rows_count > words * 64) continue;
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(rows_count) * words);
      for (auto& w : rows) w = rng();
      std::vector<std::uint64_t> select(words, 0), target(words);
      for (auto& w : target) w = rng();
      for (int v = 0; v < rows_count; ++v) {
        if (rng() & 1) select[v / 64] |= std::uint64_t{1} << (v % 64);
      }
      CHECK(kernels::scalar::masked_degree_sum(rows, words, select, target) ==
            kernels::avx2::masked_degree_sum(rows, words, select, target));
    }
  }
}

TEST_CASE("dispatch: active ISA can be switched and restored") {
  const auto before = kernels::active_isa();
  kernels::set_active_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  kernels::set_active_isa(before);
  CHECK(kernels::active_isa() == before);
  if (!kernels::isa_supported(kernels::Isa::avx2)) {
    CHECK_THROWS_AS(kernels::set_active_isa(kernels::Isa::avx2), PreconditionError);
  }
}
