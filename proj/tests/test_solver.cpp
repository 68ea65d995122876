#include <gtest/gtest.h>

#include <vector>

#include "circburn/lex_product.hpp"
#include "circburn/solver.hpp"
#include "oracles.hpp"

using namespace circburn;

namespace {

std::size_t b(const CirculantSpec& spec) { return exact_burning_number(build_graph(spec)).burning_number; }

}  // namespace

TEST(ExactSolver, KnownValues) {
  EXPECT_EQ(b(normalize_spec(5, {1, 2})), 2u);
  EXPECT_EQ(b(normalize_spec(7, {1, 3})), 3u);
  EXPECT_EQ(exact_burning_number(single_vertex_graph()).burning_number, 1u);
  EXPECT_EQ(b(one_m_spec(12, 6)), 3u);
  EXPECT_EQ(b(one_m_spec(16, 8)), 4u);
  EXPECT_EQ(b(consecutive_spec(10, 3)), 3u);
  EXPECT_EQ(b(normalize_spec(6, {1, 2})), 2u);
  EXPECT_EQ(exact_burning_number(complete_graph(2)).burning_number, 2u);
}

TEST(ExactSolver, MatchesBruteForce) {
  std::vector<GenericGraph> graphs;
  for (std::int64_t n = 5; n <= 12; ++n)
    for (std::int64_t m = 2; 2 * m <= n; ++m) graphs.push_back(build_graph(one_m_spec(n, m)));
  graphs.push_back(path_graph(10));
  graphs.push_back(lex_product_generic(path_graph(3), path_graph(3)));
  graphs.push_back(GenericGraph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {5, 6}}));
  for (const auto& g : graphs) {
    const auto r = exact_burning_number(g);
    ASSERT_EQ(static_cast<int>(r.burning_number), oracle::burning_number(g));
  }
}

TEST(ExactSolver, SymmetryReductionDoesNotChangeValue) {
  SolverOptions plain;
  plain.use_symmetry = false;
  for (std::int64_t n = 5; n <= 22; ++n)
    for (std::int64_t m : {2, 3}) {
      if (2 * m > n) continue;
      const auto g = build_graph(one_m_spec(n, m));
      ASSERT_EQ(exact_burning_number(g).burning_number, exact_burning_number(g, plain).burning_number) << n << ' ' << m;
    }
}

TEST(ExactSolver, WitnessIsMinimal) {
  for (std::int64_t n = 5; n <= 30; ++n) {
    const auto g = build_graph(one_m_spec(n, 2));
    const auto r = exact_burning_number(g);
    ASSERT_EQ(r.witness.length(), r.burning_number);
    ASSERT_TRUE(verify_cover(g, r.witness));
    const auto dist = oracle::all_pairs(g);
    if (n <= 14) {
      ASSERT_FALSE(oracle::some_sequence_of_length(dist, static_cast<int>(r.burning_number) - 1));
    }
  }
}

TEST(ExactSolver, PathsAndCycles) {
  for (std::size_t q = 1; q <= 25; ++q) {
    const auto expected = static_cast<std::size_t>(ceil_sqrt(static_cast<std::int64_t>(q)));
    ASSERT_EQ(exact_burning_number(path_graph(q)).burning_number, expected) << q;
    ASSERT_EQ(exact_burning_number(cycle_graph(q)).burning_number, expected) << q;
  }
}

TEST(ExactSolver, Hints) {
  const auto g = build_graph(one_m_spec(12, 2));
  SolverOptions low;
  low.upper_hint = 2;
  try {
    exact_burning_number(g, low);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  SolverOptions start;
  start.lower_hint = 3;
  EXPECT_EQ(exact_burning_number(g, start).burning_number, 3u);
  // A lower hint above the true value just returns the hint.
  start.lower_hint = 5;
  EXPECT_EQ(exact_burning_number(g, start).burning_number, 5u);
}

TEST(ExactSolver, RejectsDisconnected) {
  // GenericGraph itself refuses disconnected input.
  EXPECT_THROW(GenericGraph::from_edges(4, {{0, 1}, {2, 3}}), Error);
}
