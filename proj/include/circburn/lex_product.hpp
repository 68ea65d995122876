#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "circulant.hpp"
#include "graph.hpp"

namespace circburn {

// Vertex (x, y) of G.H is labelled x + |G| * y, both here and in lex_product_spec.
constexpr Vertex product_label(Vertex x, Vertex y, std::size_t g_order) {
  return static_cast<Vertex>(x + g_order * y);
}

// Distances of C(n1;S).C(n2;T) ~ C(n1 n2; n1 T u (n1 Z_{n2} + S)) with S, T closed
// under negation before the union is reduced to canonical form.
inline CirculantSpec lex_product_spec(const CirculantSpec& g, const CirculantSpec& h) {
  const std::int64_t n1 = g.order();
  const std::int64_t n2 = h.order();
  std::vector<std::int64_t> raw;
  for (auto t : h.distances())
    for (auto signed_t : {t, -t}) raw.push_back(n1 * signed_t);
  for (auto s : g.distances())
    for (auto signed_s : {s, -s})
      for (std::int64_t j = 0; j < n2; ++j) raw.push_back(n1 * j + signed_s);
  return normalize_spec(n1 * n2, raw);
}

inline GenericGraph lex_product_generic(const GenericGraph& g, const GenericGraph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  std::vector<std::vector<Vertex>> adj(ng * nh);
  for (Vertex x = 0; x < ng; ++x)
    for (Vertex y = 0; y < nh; ++y) {
      auto& nb = adj[product_label(x, y, ng)];
      for (Vertex x2 : g.neighbors(x))
        for (Vertex y2 = 0; y2 < nh; ++y2) nb.push_back(product_label(x2, y2, ng));
      for (Vertex y2 : h.neighbors(y)) nb.push_back(product_label(x, y2, ng));
    }
  return GenericGraph(std::move(adj), false);
}

inline bool same_edge_set(const GenericGraph& a, const GenericGraph& b) {
  return a.order() == b.order() && a.adjacency() == b.adjacency();
}

// Backtracking isomorphism search with degree filtering; intended for order <= 64.
inline std::optional<std::vector<Vertex>> find_isomorphism(const GenericGraph& a, const GenericGraph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count() || n > 64) return std::nullopt;
  std::vector<Vertex> map(n, 0);
  std::vector<char> used(n, 0);
  const auto consistent = [&](Vertex v, Vertex image) {
    if (a.neighbors(v).size() != b.neighbors(image).size()) return false;
    for (Vertex u = 0; u < v; ++u)
      if (a.adjacent(u, v) != b.adjacent(map[u], image)) return false;
    return true;
  };
  const auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex image = 0; image < n; ++image) {
      if (used[image] || !consistent(v, image)) continue;
      map[v] = image;
      used[image] = 1;
      if (self(self, v + 1)) return true;
      used[image] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

enum class ProductIdentity { NotChecked, LiteralEquality, IsomorphicOnly, Mismatch };

// Compares lex_product_spec against the generic construction under product_label,
// falling back to an isomorphism search on small graphs.
inline ProductIdentity check_product_identity(const CirculantSpec& g, const CirculantSpec& h) {
  const GenericGraph from_spec = build_graph(lex_product_spec(g, h));
  const GenericGraph generic = lex_product_generic(build_graph(g), build_graph(h));
  if (same_edge_set(from_spec, generic)) return ProductIdentity::LiteralEquality;
  if (from_spec.order() <= 64 && find_isomorphism(from_spec, generic)) return ProductIdentity::IsomorphicOnly;
  return ProductIdentity::Mismatch;
}

}  // namespace circburn
