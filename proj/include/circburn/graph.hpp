#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "circulant.hpp"
#include "error.hpp"
#include "vertex_set.hpp"

namespace circburn {

// Finite simple connected undirected graph with sorted adjacency lists.
using Adjacency = std::vector<std::vector<Vertex>>;

class GenericGraph {
 public:
  // Validates symmetry, loops, duplicates and connectivity; sorts each list.
  GenericGraph(std::vector<std::vector<Vertex>> adjacency, bool transitive = false)
      : adjacency_(std::move(adjacency)), transitive_(transitive) {
    if (adjacency_.empty()) throw Error(ErrorCode::InvalidArgument, "graph order must be >= 1");
    const auto n = adjacency_.size();
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nbrs = adjacency_[v];
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vertex u = nbrs[i];
        if (u >= n) throw Error(ErrorCode::VertexOutOfRange, "neighbor out of range");
        if (u == v) throw Error(ErrorCode::InvalidArgument, "self loop");
        if (i > 0 && nbrs[i - 1] == u) throw Error(ErrorCode::InvalidArgument, "duplicate neighbor");
        if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), static_cast<Vertex>(v)))
          throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency");
      }
    }
    if (!connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  }

  static GenericGraph from_edges(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    std::vector<std::vector<Vertex>> adj(order);
    for (auto [a, b] : edges) {
      adj.at(a).push_back(b);
      adj.at(b).push_back(a);
    }
    return GenericGraph(std::move(adj));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }
  bool transitive() const noexcept { return transitive_; }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adjacency_) twice += nb.size();
    return twice / 2;
  }

  // Sorted (min, max) edge list.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex v = 0; v < order(); ++v)
      for (Vertex u : adjacency_[v])
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  bool regular() const {
    for (const auto& nb : adjacency_)
      if (nb.size() != adjacency_[0].size()) return false;
    return true;
  }

 private:
  bool connected() const {
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adjacency_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == order();
  }

  std::vector<std::vector<Vertex>> adjacency_;
  bool transitive_ = false;
};

inline GenericGraph build_graph(const CirculantSpec& spec) {
  const auto n = spec.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    auto& nb = adj[static_cast<std::size_t>(x)];
    for (auto d : spec.distances()) {
      nb.push_back(static_cast<Vertex>(mod(x + d, n)));
      if (2 * d != n) nb.push_back(static_cast<Vertex>(mod(x - d, n)));
    }
  }
  return GenericGraph(std::move(adj), true);
}

inline GenericGraph single_vertex_graph() { return GenericGraph(Adjacency(1)); }

inline GenericGraph path_graph(std::size_t q) {
  std::vector<std::vector<Vertex>> adj(q);
  for (std::size_t i = 0; i + 1 < q; ++i) {
    adj[i].push_back(static_cast<Vertex>(i + 1));
    adj[i + 1].push_back(static_cast<Vertex>(i));
  }
  return GenericGraph(std::move(adj));
}

// Cycle on q >= 3 vertices; q < 3 degenerates to the path.
inline GenericGraph cycle_graph(std::size_t q) {
  if (q < 3) return path_graph(q);
  std::vector<std::vector<Vertex>> adj(q);
  for (std::size_t i = 0; i < q; ++i) {
    adj[i].push_back(static_cast<Vertex>((i + 1) % q));
    adj[i].push_back(static_cast<Vertex>((i + q - 1) % q));
  }
  return GenericGraph(std::move(adj), true);
}

inline GenericGraph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) adj[a].push_back(static_cast<Vertex>(b));
  return GenericGraph(std::move(adj), true);
}

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::uint32_t> bfs_distances(const GenericGraph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v))
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

// N_radius[v]: vertices within graph distance `radius` of v.
inline VertexSet ball_bfs(const GenericGraph& g, Vertex v, std::size_t radius) {
  if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "ball center out of range");
  VertexSet ball(g.order());
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{v};
  dist[v] = 0;
  ball.insert(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (dist[x] == radius) continue;
    for (Vertex u : g.neighbors(x))
      if (dist[u] == kUnreachable) {
        dist[u] = dist[x] + 1;
        ball.insert(u);
        queue.push_back(u);
      }
  }
  return ball;
}

inline std::uint32_t eccentricity(const GenericGraph& g, Vertex v) {
  const auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace circburn
