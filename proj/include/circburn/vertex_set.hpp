#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace circburn {

using Vertex = std::uint32_t;

// Fixed-universe bitset over 0..size-1 with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    s.count_ = universe;
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  void insert(Vertex v) {
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if ((w & bit) == 0) {
      w |= bit;
      ++count_;
    }
  }

  // Inserts the half-open range [first, last) of raw indices (no wraparound).
  void insert_range(std::size_t first, std::size_t last) {
    for (std::size_t v = first; v < last; ++v) words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    recount();
  }

  VertexSet& operator|=(const VertexSet& other) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
      c += static_cast<std::size_t>(std::popcount(words_[i]));
    }
    count_ = c;
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
  void recount() {
    count_ = 0;
    for (auto w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

}  // namespace circburn
