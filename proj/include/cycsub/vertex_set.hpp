#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cycsub {

inline int words_for(int bits) { return (bits + 63) / 64; }

// Subset of {0, ..., universe-1} stored as packed 64-bit words. Bits at or
// above `universe` are always zero.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {}

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet of(int universe, std::span<const int> members);
  static VertexSet from_mask(int universe, std::uint64_t mask);
  static VertexSet range(int universe, int begin, int end);

  int universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  int first() const;  // -1 when empty
  std::vector<int> to_vector() const;
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        f(static_cast<int>(w * 64) + b);
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Ordered partition (x, y) of the vertex set.
struct Cut {
  VertexSet x;
  VertexSet y;

  static Cut from_side(const VertexSet& x) { return Cut{x, x.complement()}; }
  bool balanced() const { return x.size() == y.size(); }
  bool is_partition() const {
    return !x.intersects(y) && (x | y).size() == x.universe();
  }
};

}  // namespace cycsub
