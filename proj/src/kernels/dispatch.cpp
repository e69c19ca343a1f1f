#include <atomic>

#include "cycsub/errors.hpp"
#include "cycsub/kernels.hpp"

namespace cycsub::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(CYCSUB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Isa detected_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw PreconditionError(std::string("ISA not supported on this host: ") + isa_name(isa));
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

void ham_reach(std::span<const std::uint32_t> adj, std::span<std::uint32_t> reach) {
  if (active_isa() == Isa::avx2) {
    avx2::ham_reach(adj, reach);
  } else {
    scalar::ham_reach(adj, reach);
  }
}

std::uint64_t masked_degree_sum(std::span<const std::uint64_t> rows, int words_per_row,
                                std::span<const std::uint64_t> select,
                                std::span<const std::uint64_t> target) {
  if (active_isa() == Isa::avx2) return avx2::masked_degree_sum(rows, words_per_row, select, target);
  return scalar::masked_degree_sum(rows, words_per_row, select, target);
}

}  // namespace cycsub::kernels
