#include "cycsub/vertex_set.hpp"

namespace cycsub {

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const int tail = universe & 63; tail != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  VertexSet s(universe);
  if (s.words_.empty()) return s;
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::range(int universe, int begin, int end) {
  VertexSet s(universe);
  for (int v = begin; v < end; ++v) s.insert(v);
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  }
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const {
  VertexSet s = full(universe_);
  return s -= *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

}  // namespace cycsub
