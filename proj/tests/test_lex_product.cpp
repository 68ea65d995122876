#include <gtest/gtest.h>

#include <vector>

#include "circburn/lex_product.hpp"

using namespace circburn;

TEST(LexProductSpec, SpecExamples) {
  const auto k6 = lex_product_spec(normalize_spec(3, {1}), normalize_spec(2, {1}));
  EXPECT_EQ(k6.order(), 6);
  EXPECT_EQ(k6.distances(), (std::vector<std::int64_t>{1, 2, 3}));

  const auto c8 = lex_product_spec(normalize_spec(4, {1}), normalize_spec(2, {1}));
  EXPECT_EQ(c8.order(), 8);
  EXPECT_EQ(c8.distances(), (std::vector<std::int64_t>{1, 3, 4}));

  const auto k15 = lex_product_spec(normalize_spec(5, {1, 2}), normalize_spec(3, {1}));
  EXPECT_EQ(k15.order(), 15);
  EXPECT_EQ(k15.distances(), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(LexProductGeneric, SmallCases) {
  const auto k4 = lex_product_generic(complete_graph(2), complete_graph(2));
  EXPECT_EQ(k4.order(), 4u);
  EXPECT_EQ(k4.edge_count(), 6u);
  EXPECT_FALSE(k4.transitive());

  const auto p = lex_product_generic(cycle_graph(4), complete_graph(2));
  EXPECT_EQ(p.order(), 8u);
  EXPECT_TRUE(p.regular());
  EXPECT_EQ(p.neighbors(0).size(), 5u);

  const auto h = cycle_graph(5);
  const auto same = lex_product_generic(single_vertex_graph(), h);
  EXPECT_TRUE(same_edge_set(same, h));
}

TEST(LexProduct, SpecAndGenericAgreeUnderLabeling) {
  const std::vector<CirculantSpec> factors{normalize_spec(2, {1}),    normalize_spec(3, {1}),
                                           normalize_spec(4, {1}),    normalize_spec(4, {1, 2}),
                                           normalize_spec(5, {1}),    normalize_spec(5, {1, 2}),
                                           normalize_spec(6, {1, 3}), normalize_spec(7, {1, 3})};
  for (const auto& g : factors)
    for (const auto& h : factors) EXPECT_EQ(check_product_identity(g, h), ProductIdentity::LiteralEquality)
        << g.to_string() << " . " << h.to_string();
}

TEST(FindIsomorphism, RecognizesMultiplierIsomorphism) {
  // x -> 3x maps C(7;1,2) onto C(7;1,3).
  const auto a = build_graph(normalize_spec(7, {1, 2}));
  const auto b = build_graph(normalize_spec(7, {1, 3}));
  ASSERT_FALSE(same_edge_set(a, b));
  const auto map = find_isomorphism(a, b);
  ASSERT_TRUE(map.has_value());
  for (auto [u, v] : a.edges()) EXPECT_TRUE(b.adjacent((*map)[u], (*map)[v]));
}

TEST(FindIsomorphism, RejectsNonIsomorphicSameDegree) {
  // C(8;1,3) is bipartite, C(8;1,2) contains triangles.
  EXPECT_FALSE(find_isomorphism(build_graph(normalize_spec(8, {1, 2})), build_graph(normalize_spec(8, {1, 3}))));
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), path_graph(6)));
}
