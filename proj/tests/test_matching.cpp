#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ugeo/exact.hpp"
#include "ugeo/generators.hpp"
#include "ugeo/matching.hpp"

namespace ugeo {
namespace {

TEST(Matching, Examples) {
  EXPECT_EQ(maximum_matching(oracle::path(3)).size(), 1u);
  Graph edge = oracle::path(2);
  Matching m = maximum_matching(edge);
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.partner(0), std::optional<Vertex>(1));
  EXPECT_EQ(maximum_matching(Graph::from_edges(5, {})).size(), 0u);
  EXPECT_EQ(maximum_matching(Graph()).size(), 0u);
}

TEST(Matching, OddCyclesNeedBlossoms) {
  // Two triangles joined by a path: greedy-only search would miss the
  // augmenting path through the first blossom.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}};
  Graph g = Graph::from_edges(7, e);
  EXPECT_EQ(maximum_matching(g).size(), oracle::brute_matching_size(g, VertexMask(7)));
  EXPECT_EQ(maximum_matching(oracle::complete(7)).size(), 3u);
  EXPECT_EQ(maximum_matching(oracle::cycle(9)).size(), 4u);
}

TEST(Matching, SizeAgreesWithBruteForce) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 1 + rng() % 12;
    double p = std::uniform_real_distribution<double>(0.05, 0.8)(rng);
    Graph g = random_graph(n, p, rng);
    VertexMask mask(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 5 == 0) mask.remove(v);
    Matching m = maximum_matching(g, mask);
    ASSERT_TRUE(is_valid_matching(g, mask, m));
    ASSERT_EQ(m.size(), oracle::brute_matching_size(g, mask));
  }
}

TEST(Matching, ValidOnLargerGraphs) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 13 + rng() % 52;
    Graph g = random_graph(n, 0.08, rng);
    VertexMask mask(n);
    Matching m = maximum_matching(g, mask);
    ASSERT_TRUE(is_valid_matching(g, mask, m));
    // Maximality: no edge joins two exposed vertices.
    for (auto [u, v] : g.edges())
      ASSERT_FALSE(m.mate[u] == kNoVertex && m.mate[v] == kNoVertex);
  }
}

TEST(Winnability, Examples) {
  Position p3{oracle::path(3), 1};
  EXPECT_TRUE(is_winnable(p3));
  p3.token = 0;
  EXPECT_FALSE(is_winnable(p3));
  EXPECT_FALSE(is_winnable(Position{Graph::from_edges(1, {}), 0}));

  Position edge{oracle::path(2), 0};
  EXPECT_EQ(winning_move(edge), std::optional<Vertex>(1));
  Position mid{oracle::path(3), 1};
  auto w = winning_move(mid);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(*w == 0 || *w == 2);
  EXPECT_FALSE(winning_move(Position{oracle::path(3), 0}).has_value());
}

// Definition: winnable iff the matching number drops when the token goes.
TEST(Winnability, MatchesMatchingNumberDefinition) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 1500; ++trial) {
    std::size_t n = 1 + rng() % 11;
    Graph g = random_graph(n, 0.35, rng);
    VertexMask mask(n);
    Vertex token = static_cast<Vertex>(rng() % n);
    for (Vertex v = 0; v < n; ++v)
      if (v != token && rng() % 6 == 0) mask.remove(v);
    VertexMask without = mask;
    without.remove(token);
    bool expected = oracle::brute_matching_size(g, mask) > oracle::brute_matching_size(g, without);
    ASSERT_EQ(is_winnable(g, mask, token), expected);
  }
}

TEST(Winnability, AgreesWithBruteForceGameTree) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 1500; ++trial) {
    std::size_t n = 1 + rng() % 9;
    Graph g = random_graph(n, 0.4, rng);
    Vertex token = static_cast<Vertex>(rng() % n);
    Position p{g, token};
    bool nonzero = oracle::brute_grundy(g, token) != 0;
    Determination d = determine(g, VertexMask(n), token);
    ASSERT_EQ(d.winnable, nonzero);
    ASSERT_EQ(d.winning_move.has_value(), nonzero);
    if (d.winning_move) {
      VertexMask child(n);
      child.remove(token);
      ASSERT_TRUE(g.has_edge(token, *d.winning_move));
      ASSERT_EQ(oracle::brute_grundy(g, *d.winning_move, child), 0u);
    }
  }
}

}  // namespace
}  // namespace ugeo
