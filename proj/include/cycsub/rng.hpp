#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cycsub {

// SplitMix64. Streams are keyed by (seed, index) so that sample i draws the
// same numbers regardless of which worker runs it.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t next() { return mix(state_ += 0x9e3779b97f4a7c15ULL); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    while (true) {
      const auto prod = static_cast<unsigned __int128>(next()) * bound;
      const auto low = static_cast<std::uint64_t>(prod);
      if (low >= (-bound) % bound) return static_cast<std::uint64_t>(prod >> 64);
    }
  }

  bool bernoulli(double p) { return p >= 1.0 || uniform() < p; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // UniformRandomBitGenerator interface, for std::shuffle and friends.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t state_;
};

// Fisher-Yates with our own index draws, so the order is the same on every
// standard library.
template <class T>
void shuffle_in_place(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace cycsub
