#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "circulant.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "integer_math.hpp"
#include "neighborhood.hpp"

namespace circburn {

// Ordered, pairwise-distinct burning sources (x_1, ..., x_k).
class BurnSequence {
 public:
  BurnSequence() = default;
  explicit BurnSequence(std::vector<Vertex> sources) : sources_(std::move(sources)) {
    std::unordered_set<Vertex> seen;
    for (Vertex v : sources_)
      if (!seen.insert(v).second) throw Error(ErrorCode::DuplicateSource, "vertex " + std::to_string(v) + " repeated");
  }

  std::size_t length() const noexcept { return sources_.size(); }
  bool empty() const noexcept { return sources_.empty(); }
  const std::vector<Vertex>& sources() const noexcept { return sources_; }
  Vertex operator[](std::size_t i) const { return sources_.at(i); }
  // Radius reached by the i-th (0-based) source at the end of the process.
  std::size_t radius_of(std::size_t i) const noexcept { return sources_.size() - 1 - i; }

  void require_in_range(std::size_t order) const {
    for (Vertex v : sources_)
      if (v >= order) throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(v) + " >= order " + std::to_string(order));
  }

  std::string to_string(char sep = ';') const {
    std::string out;
    for (std::size_t i = 0; i < sources_.size(); ++i) {
      if (i) out += sep;
      out += std::to_string(sources_[i]);
    }
    return out;
  }

  friend bool operator==(const BurnSequence&, const BurnSequence&) = default;

 private:
  std::vector<Vertex> sources_;
};

struct BurnSchedule {
  std::vector<std::uint32_t> burn_time;  // 0 = not burned within the horizon
  std::vector<std::size_t> redundant_steps;  // 1-based steps whose source was already burning
  std::size_t steps = 0;
  bool completed = false;
};

// Step i: fire spreads to neighbors of burned vertices, then x_i ignites.
inline BurnSchedule simulate(const GenericGraph& g, const BurnSequence& seq) {
  seq.require_in_range(g.order());
  BurnSchedule out;
  out.steps = seq.length();
  out.burn_time.assign(g.order(), 0);
  std::vector<Vertex> frontier;
  std::size_t burned = 0;
  for (std::size_t step = 1; step <= seq.length(); ++step) {
    const auto t = static_cast<std::uint32_t>(step);
    std::vector<Vertex> next;
    for (Vertex v : frontier)
      for (Vertex u : g.neighbors(v))
        if (out.burn_time[u] == 0) {
          out.burn_time[u] = t;
          next.push_back(u);
        }
    const Vertex src = seq[step - 1];
    if (out.burn_time[src] == 0) {
      out.burn_time[src] = t;
      next.push_back(src);
    } else {
      out.redundant_steps.push_back(step);
    }
    burned += next.size();
    frontier = std::move(next);
  }
  out.completed = burned == g.order();
  return out;
}

// Whether N_{k-1}[x_1] u ... u N_0[x_k] = V(G), computed from independent balls.
inline bool verify_cover(const GenericGraph& g, const BurnSequence& seq) {
  seq.require_in_range(g.order());
  VertexSet covered(g.order());
  for (std::size_t i = 0; i < seq.length(); ++i) {
    covered |= ball_bfs(g, seq[i], seq.radius_of(i));
    if (covered.is_full()) return true;
  }
  return covered.is_full();
}

namespace detail {

// Difference-array coverage counter over Z_n.
class CyclicCoverage {
 public:
  explicit CyclicCoverage(std::int64_t n) : n_(n), diff_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(const CyclicInterval& iv) {
    const std::int64_t len = iv.length();
    if (len == 0) return;
    if (len >= n_) {
      full_ = true;
      return;
    }
    const std::int64_t start = mod(iv.lo, n_);
    const std::int64_t end = start + len;
    if (end <= n_) {
      ++diff_[idx(start)];
      --diff_[idx(end)];
    } else {
      ++diff_[idx(start)];
      --diff_[idx(n_)];
      ++diff_[0];
      --diff_[idx(end - n_)];
    }
  }

  bool all_covered() const {
    if (full_) return true;
    std::int64_t run = 0;
    for (std::int64_t v = 0; v < n_; ++v) {
      run += diff_[idx(v)];
      if (run <= 0) return false;
    }
    return true;
  }

 private:
  static std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }
  std::int64_t n_;
  std::vector<std::int64_t> diff_;
  bool full_ = false;
};

}  // namespace detail

// verify_cover on a circulant using closed-form balls wherever a closed form is
// valid for the radius; falls back to BFS balls otherwise (e.g. m = n/2, l > n/4).
inline bool verify_cover_closed_form(const CirculantSpec& spec, const BurnSequence& seq) {
  const std::int64_t n = spec.order();
  seq.require_in_range(static_cast<std::size_t>(n));
  detail::CyclicCoverage coverage(n);
  std::optional<GenericGraph> graph;
  for (std::size_t i = 0; i < seq.length(); ++i) {
    const auto radius = static_cast<std::int64_t>(seq.radius_of(i));
    if (auto ivs = closed_form_intervals(spec, seq[i], radius)) {
      for (const auto& iv : *ivs) coverage.add(iv);
      continue;
    }
    if (!graph) graph.emplace(build_graph(spec));
    for (Vertex v : ball_bfs(*graph, seq[i], static_cast<std::size_t>(radius)).members())
      coverage.add({v, v});
  }
  return coverage.all_covered();
}

enum class LineKind { Path, Cycle };

struct PathBurn {
  std::int64_t k = 0;
  BurnSequence sequence;
};

// Optimal burn of P_q or C_q: k = ceil(sqrt q); the radius k-i balls tile 0..q-1
// left to right. Sources past complete coverage are the smallest unused vertices.
inline PathBurn optimal_path_cycle_burn(std::int64_t q, LineKind kind = LineKind::Path) {
  (void)kind;  // the path tiling also burns the cycle, which has the same burning number
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "path/cycle order must be >= 1");
  const std::int64_t k = ceil_sqrt(q);
  std::vector<std::int64_t> centers;
  std::int64_t start = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::int64_t r = k - i;
    if (start <= q - 1) {
      centers.push_back(std::min(start + r, q - 1));
      start += 2 * r + 1;
    } else {
      centers.push_back(-1);
    }
  }
  std::vector<char> used(static_cast<std::size_t>(q), 0);
  for (auto c : centers)
    if (c >= 0) used[static_cast<std::size_t>(c)] = 1;
  std::int64_t next_free = 0;
  std::vector<Vertex> out;
  for (auto c : centers) {
    if (c < 0) {
      while (used[static_cast<std::size_t>(next_free)]) ++next_free;
      c = next_free;
      used[static_cast<std::size_t>(c)] = 1;
    }
    out.push_back(static_cast<Vertex>(c));
  }
  return {k, BurnSequence(std::move(out))};
}

}  // namespace circburn
