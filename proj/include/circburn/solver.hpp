#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "burn.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace circburn {

struct SolverOptions {
  std::optional<std::size_t> lower_hint;
  std::optional<std::size_t> upper_hint;
  // Fix the largest-radius source at vertex 0 when the graph is vertex-transitive.
  bool use_symmetry = true;
};

struct SolverResult {
  std::size_t burning_number = 0;
  BurnSequence witness;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

// Depth-first assignment of centers to radii k-1, ..., 0 for one horizon k.
class CoverSearch {
 public:
  CoverSearch(const GenericGraph& g, const std::vector<std::vector<std::uint32_t>>& dist, std::size_t k,
              bool fix_first)
      : n_(g.order()), words_((n_ + 63) / 64), k_(k), fix_first_(fix_first) {
    balls_.assign(k_ * n_ * words_, 0);
    std::vector<std::size_t> max_size(k_, 0);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t v = 0; v < n_; ++v) {
        std::uint64_t* ball = ball_ptr(r, v);
        std::size_t size = 0;
        for (std::size_t u = 0; u < n_; ++u)
          if (dist[v][u] <= r) {
            ball[u >> 6] |= std::uint64_t{1} << (u & 63);
            ++size;
          }
        max_size[r] = std::max(max_size[r], size);
      }
    // capacity_[level] = most vertices levels level..k-1 could still cover.
    capacity_.assign(k_ + 1, 0);
    for (std::size_t level = k_; level-- > 0;) capacity_[level] = capacity_[level + 1] + max_size[k_ - 1 - level];
    covered_.assign((k_ + 1) * words_, 0);
    used_.assign(n_, 0);
    chosen_.assign(k_, 0);
  }

  bool run() { return descend(0, 0); }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<Vertex>& chosen() const noexcept { return chosen_; }

 private:
  std::uint64_t* ball_ptr(std::size_t radius, std::size_t v) { return &balls_[(radius * n_ + v) * words_]; }
  std::uint64_t* covered_ptr(std::size_t level) { return &covered_[level * words_]; }

  bool descend(std::size_t level, std::size_t covered_count) {
    ++nodes_;
    if (covered_count == n_) {
      fill_redundant(level);
      return true;
    }
    if (level == k_) return false;
    if (n_ - covered_count > capacity_[level]) return false;

    const std::size_t radius = k_ - 1 - level;
    const std::uint64_t* cur = covered_ptr(level);
    std::uint64_t* next = covered_ptr(level + 1);
    const Vertex last = (level == 0 && fix_first_) ? 1 : static_cast<Vertex>(n_);
    for (Vertex c = 0; c < last; ++c) {
      if (used_[c]) continue;
      const std::uint64_t* ball = ball_ptr(radius, c);
      std::size_t count = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = cur[w] | ball[w];
        count += static_cast<std::size_t>(std::popcount(next[w]));
      }
      // A center adding nothing can be exchanged for an uncovered vertex (which
      // is unused) without shrinking the cover, so it never needs exploring.
      if (count == covered_count) continue;
      used_[c] = 1;
      chosen_[level] = c;
      if (descend(level + 1, count)) return true;
      used_[c] = 0;
    }
    return false;
  }

  void fill_redundant(std::size_t level) {
    Vertex v = 0;
    for (; level < k_; ++level) {
      while (used_[v]) ++v;
      used_[v] = 1;
      chosen_[level] = v;
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::size_t k_;
  bool fix_first_;
  std::vector<std::uint64_t> balls_;
  std::vector<std::size_t> capacity_;
  std::vector<std::uint64_t> covered_;
  std::vector<char> used_;
  std::vector<Vertex> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact burning number by iterative deepening on k.
inline SolverResult exact_burning_number(const GenericGraph& g, const SolverOptions& options = {}) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> dist;
  dist.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    dist.push_back(bfs_distances(g, v));
    if (std::find(dist.back().begin(), dist.back().end(), kUnreachable) != dist.back().end())
      throw Error(ErrorCode::Disconnected, "exact_burning_number needs a connected graph");
  }
  const bool fix_first = options.use_symmetry && g.transitive();
  SolverResult result;
  for (std::size_t k = std::max<std::size_t>(1, options.lower_hint.value_or(1));; ++k) {
    if (options.upper_hint && k > *options.upper_hint)
      throw Error(ErrorCode::InvalidArgument, "no burning sequence within upper_hint");
    if (k > n) throw Error(ErrorCode::InvalidArgument, "lower_hint exceeds graph order");
    detail::CoverSearch search(g, dist, k, fix_first);
    const bool found = search.run();
    result.nodes_explored += search.nodes();
    if (found) {
      result.burning_number = k;
      result.witness = BurnSequence(search.chosen());
      return result;
    }
  }
}

}  // namespace circburn
