#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ugeo/exact.hpp"
#include "ugeo/generators.hpp"
#include "ugeo/gg_solver.hpp"
#include "ugeo/reductions.hpp"
#include "ugeo/variants.hpp"
#include "ugeo/variants_io.hpp"

namespace ugeo {
namespace {

PlainState plain(Graph g, Vertex token) { return make_plain(make_position(std::move(g), token)); }
PlainState edge() { return plain(oracle::path(2), 0); }
PlainState path3_mid() { return plain(oracle::path(3), 1); }

std::uint32_t grundy(const VariantState& s) { return variant_grundy(s).value(); }

PlainState random_plain(std::mt19937_64& rng, std::size_t max_n) {
  std::size_t n = 1 + rng() % max_n;
  double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  return plain(random_graph(n, p, rng), static_cast<Vertex>(rng() % n));
}

SwapUnoState random_uno(std::mt19937_64& rng) {
  SwapUnoState s;
  for (auto& hand : s.hands) {
    std::size_t k = rng() % 5;
    for (std::size_t i = 0; i < k; ++i)
      hand.push_back(Card{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)});
  }
  if (rng() % 2) s.top = Card{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)};
  s.swap_used = rng() % 4 == 0;
  s.to_move = static_cast<int>(rng() % 2);
  return s;
}

TEST(Options, Examples) {
  EXPECT_EQ(options(SumState{{edge(), edge()}}).size(), 2u);
  EXPECT_EQ(options(PassState{edge(), 1, 1}).size(), 2u);
  EXPECT_EQ(options(PassState{edge(), 0, 1}).size(), 1u);

  // Path 0-1-2-3 with tokens on 1 and 2: each may only step outward.
  MultiTokenState mt{std::make_shared<const Graph>(oracle::path(4)), {1, 2}, VertexMask(4)};
  auto moves = legal_moves(mt);
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0], Move(MultiTraverse{0, 0}));
  EXPECT_EQ(moves[1], Move(MultiTraverse{1, 3}));
  auto next = std::get<MultiTokenState>(apply_move(mt, moves[0]));
  EXPECT_TRUE(next.mask.removed(1));
  EXPECT_EQ(next.tokens, (std::vector<Vertex>{0, 2}));
}

TEST(Options, DuplicateFree) {
  SwapUnoState s;
  s.hands[0] = {{1, 1}, {1, 1}, {2, 2}};
  s.hands[1] = {{1, 2}};
  s.swap_used = true;
  EXPECT_EQ(options(s).size(), 2u);
  EXPECT_EQ(legal_moves(s).size(), 2u);
}

TEST(Moves, IllegalMovesRejected) {
  EXPECT_THROW(apply_move(PassState{edge(), 0, 1}, PassMove{}), IllegalMove);
  EXPECT_THROW(apply_move(edge(), Traverse{0}), IllegalMove);
  SwapUnoState s;
  s.hands[0] = {{1, 1}};
  VariantState once = apply_move(s, SwapMove{});
  EXPECT_TRUE(std::get<SwapUnoState>(once).swap_used);
  EXPECT_EQ(std::get<SwapUnoState>(once).hands[1], (std::vector<Card>{{1, 1}}));
  EXPECT_THROW(apply_move(once, SwapMove{}), IllegalMove);
  EXPECT_THROW(apply_move(s, UnoPlay{{9, 9}}), IllegalMove);
}

TEST(VariantGrundy, Examples) {
  EXPECT_EQ(grundy(SumState{{edge(), edge()}}), 0u);
  EXPECT_EQ(grundy(PassState{edge(), 1, 1}), 0u);
  EXPECT_EQ(grundy(PassState{edge(), 2, 2}), 1u);
  EXPECT_EQ(grundy(path3_mid()), 1u);
  EXPECT_THROW(variant_grundy(SumState{{path3_mid(), path3_mid()}}, SolveBudget{2, 60000}),
               BudgetExceeded);
}

TEST(VariantGrundy, PlainAgreesWithExact) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PlainState s = random_plain(rng, 9);
    EXPECT_EQ(grundy(s), exact_grundy(to_position(s)).value());
  }
}

TEST(VariantLaws, SumLaw) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    PlainState a = random_plain(rng, 8), b = random_plain(rng, 8);
    ASSERT_EQ(grundy(SumState{{a, b}}), grundy(a) ^ grundy(b));
  }
}

TEST(VariantLaws, PassParity) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    PlainState a = random_plain(rng, 8);
    std::uint32_t k = rng() % 4;
    ASSERT_EQ(grundy(PassState{a, k, k}), grundy(a) ^ (k % 2));
  }
}

TEST(VariantLaws, TwoTokensOnDisjointGraphsIsASum) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    PlainState a = random_plain(rng, 6), b = random_plain(rng, 6);
    Graph both = disjoint_union(*a.graph, *b.graph);
    const auto offset = static_cast<Vertex>(a.graph->vertex_count());
    MultiTokenState mt{std::make_shared<const Graph>(both), {a.token, b.token + offset},
                       VertexMask(both.vertex_count())};
    ASSERT_EQ(grundy(mt), grundy(SumState{{a, b}}));
  }
}

TEST(SwapUno, ImageExamples) {
  SwapUnoState s;
  s.hands[0] = {{1, 1}};
  s.hands[1] = {{1, 2}};
  s.swap_used = true;
  auto image = std::get<PlainState>(swap_uno_to_ug(s));
  EXPECT_EQ(image.graph->edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  s.swap_used = false;
  auto sum = std::get<SumState>(swap_uno_to_ug(s));
  ASSERT_EQ(sum.parts.size(), 2u);
  EXPECT_EQ(sum.parts[1].graph->edge_count(), 1u);

  SwapUnoState empty;
  empty.swap_used = true;
  EXPECT_TRUE(is_terminal(empty));
  EXPECT_TRUE(is_terminal(swap_uno_to_ug(empty)));
  empty.swap_used = false;
  EXPECT_EQ(grundy(empty), 1u);
}

TEST(SwapUno, DirectEqualsImage) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 500; ++trial) {
    SwapUnoState s = random_uno(rng);
    ASSERT_EQ(grundy(s), grundy(swap_uno_to_ug(s)));
  }
}

TEST(FastSolve, Examples) {
  auto r = fast_variant_solve(path3_mid());
  EXPECT_EQ(r.winnable, true);
  EXPECT_EQ(r.value, Nimber(1));
  EXPECT_EQ(r.method, "matching+degree3");

  r = fast_variant_solve(PassState{path3_mid(), 2, 2});
  EXPECT_EQ(r.winnable, true);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.method, "matching");

  r = fast_variant_solve(plain(oracle::star(5), 0));
  EXPECT_EQ(r.method, "matching");

  PlainState a = plain(oracle::path(5), 2), b = plain(oracle::cycle(6), 0);
  r = fast_variant_solve(SumState{{a, b}});
  EXPECT_EQ(r.method, "degree3");
  auto expected = grundy_degree3(to_position(a)) ^ grundy_degree3(to_position(b));
  EXPECT_EQ(r.value, expected);
  EXPECT_EQ(r.value, Nimber(grundy(SumState{{a, b}})));

  r = fast_variant_solve(SumState{{plain(oracle::complete(12), 0), edge()}}, SolveBudget{50, 60000});
  EXPECT_EQ(r.method, "needs_nimber");
  EXPECT_FALSE(r.winnable.has_value());
}

TEST(FastSolve, AgreesWithVariantGrundy) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 400; ++trial) {
    VariantState s;
    switch (trial % 5) {
      case 0: s = random_plain(rng, 8); break;
      case 1: s = SumState{{random_plain(rng, 7), random_plain(rng, 7)}}; break;
      case 2: {
        std::uint32_t k = rng() % 4;
        s = PassState{random_plain(rng, 8), k, k};
        break;
      }
      case 3: {
        PlainState a = random_plain(rng, 7);
        MultiTokenState mt{a.graph, {a.token}, a.mask};
        for (Vertex v = 0; v < a.graph->vertex_count() && mt.tokens.size() < 2; ++v)
          if (v != a.token) mt.tokens.push_back(v);
        s = mt;
        break;
      }
      default: s = random_uno(rng); break;
    }
    auto truth = variant_grundy(s);
    auto fast = fast_variant_solve(s);
    ASSERT_TRUE(fast.winnable.has_value());
    ASSERT_EQ(*fast.winnable, !truth.is_zero());
    if (fast.value) {
      ASSERT_EQ(*fast.value, truth);
    }
  }
}

// Adding a * to the reduced graph: the sum is a loss for the player to move
// exactly when the directed position is P.
TEST(FastSolve, AddToStarCharacterization) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_digraph(n, 3, [&](const DirectedGraph& d) {
      GGSolver gg(d);
      for (Vertex s = 0; s < n; ++s) {
        auto r = gg_to_ug(make_directed_position(d, s));
        SumState sum{{make_plain(r.position), edge()}};
        ASSERT_EQ(!variant_grundy(sum).is_zero(), gg.wins(s));
        ++checked;
      }
    });
  EXPECT_GT(checked, 100u);
}

TEST(VariantJson, RoundTrip) {
  std::mt19937_64 rng(17);
  std::vector<VariantState> states{
      path3_mid(), SumState{{edge(), path3_mid()}}, PassState{edge(), 1, 3},
      MultiTokenState{std::make_shared<const Graph>(oracle::path(4)), {1, 2}, VertexMask(4)},
      random_uno(rng)};
  PlainState moved = std::get<PlainState>(apply_move(path3_mid(), Traverse{0}));
  states.push_back(moved);
  for (const auto& s : states) {
    Json j = variant_to_json(s);
    VariantState back = variant_from_json(Json::parse(j.dump()));
    EXPECT_EQ(variant_to_json(back), j);
    EXPECT_EQ(state_key(back), state_key(s));
  }
  EXPECT_EQ(variant_to_json(moved)["removed"], Json::array({1}));
}

TEST(VariantJson, Errors) {
  EXPECT_THROW(variant_from_json(Json::parse(R"({"vertices":2})")), ParseError);
  EXPECT_THROW(variant_from_json(Json::parse(R"({"variant":"chess"})")), ParseError);
  EXPECT_THROW(variant_from_json(Json::parse(R"({"variant":"plain","vertices":2,"edges":[[0,1]],"token":5})")),
               InvalidGraph);
  EXPECT_THROW(variant_from_json(Json::parse(
                   R"({"variant":"plain","vertices":2,"edges":[[0,1]],"token":0,"removed":[0]})")),
               InvalidGraph);
  EXPECT_THROW(variant_from_json(Json::parse(
                   R"({"variant":"pass","vertices":2,"edges":[[0,1]],"token":0,"passes_remaining":3,"passes_total":1})")),
               InvalidGraph);
  EXPECT_THROW(variant_from_json(Json::parse(
                   R"({"variant":"multitoken","vertices":3,"edges":[[0,1]],"tokens":[1,1]})")),
               InvalidGraph);
  EXPECT_THROW(move_from_json(Json::parse(R"({"type":"fly"})")), ParseError);
  EXPECT_EQ(move_from_json(move_to_json(UnoPlay{{3, 4}})), Move(UnoPlay{{3, 4}}));
}

}  // namespace
}  // namespace ugeo
