#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "ugeo/generators.hpp"
#include "ugeo/service.hpp"

namespace ugeo {
namespace {

const char* kPath3 = R"({"variant":"plain","vertices":3,"edges":[[0,1],[1,2]],"token":1})";

std::string with_ai(const std::string& game, const std::string& ai) {
  return R"({"game":)" + game + R"(,"ai_players":)" + ai + "}";
}

std::string create_id(GameService& svc, const std::string& body) {
  auto r = svc.create(body);
  EXPECT_EQ(r.status, 201) << r.body.dump();
  return r.body.value("id", "");
}

TEST(Service, CreateAndGet) {
  GameService svc;
  auto r = svc.create(kPath3);
  ASSERT_EQ(r.status, 201);
  EXPECT_EQ(r.body["to_move"], 0);
  EXPECT_EQ(r.body["variant"], "plain");
  EXPECT_EQ(r.body["legal_moves"].size(), 2u);
  EXPECT_FALSE(r.body["terminal"].get<bool>());
  auto g = svc.get(r.body["id"]);
  EXPECT_EQ(g.status, 200);
  EXPECT_EQ(g.body["state"], r.body["state"]);
  EXPECT_EQ(svc.health().body["sessions"], 1);
}

TEST(Service, CreateErrors) {
  GameService svc;
  EXPECT_EQ(svc.create("{not json").status, 400);
  EXPECT_EQ(svc.create(R"({"variant":"plain","vertices":3,"edges":[[0,1]],"token":9})").status, 422);
  EXPECT_EQ(svc.create(R"({"variant":"plain","vertices":3,"edges":"x","token":0})").status, 400);
  EXPECT_EQ(svc.create(with_ai(kPath3, "[2]")).status, 422);
  auto pass = svc.create(R"({"variant":"pass","vertices":2,"edges":[[0,1]],"token":0,"passes_remaining":1})");
  ASSERT_EQ(pass.status, 201);
  EXPECT_EQ(pass.body["state"]["passes_remaining"], 1);
}

TEST(Service, MovesAndErrors) {
  GameService svc;
  std::string id = create_id(svc, kPath3);
  EXPECT_EQ(svc.move(id, R"({"type":"traverse","to":1})").status, 409);
  auto r = svc.move(id, R"({"move":{"type":"traverse","to":0}})");
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(r.body["terminal"].get<bool>());
  EXPECT_EQ(r.body["winner"], 0);
  EXPECT_EQ(svc.move(id, R"({"type":"traverse","to":2})").status, 409);
  EXPECT_EQ(svc.move("nope", R"({"type":"pass"})").status, 404);
  EXPECT_EQ(svc.get("nope").status, 404);
  EXPECT_EQ(svc.hint("nope").status, 404);

  std::string pass = create_id(svc, R"({"variant":"pass","vertices":2,"edges":[[0,1]],"token":0,"passes_remaining":0,"passes_total":1})");
  EXPECT_EQ(svc.move(pass, R"({"type":"pass"})").status, 409);

  std::string uno = create_id(svc, R"({"variant":"swapuno","hands":[[{"color":1,"rank":1}],[{"color":2,"rank":2}]]})");
  EXPECT_EQ(svc.move(uno, R"({"type":"swap"})").status, 200);
  EXPECT_EQ(svc.move(uno, R"({"type":"swap"})").status, 409);
}

TEST(Service, Hints) {
  GameService svc;
  auto h = svc.hint(create_id(svc, kPath3));
  ASSERT_EQ(h.status, 200);
  EXPECT_EQ(h.body["reason"], "winning_move");
  EXPECT_EQ(h.body["move"]["type"], "traverse");
  EXPECT_TRUE(h.body["move"]["to"] == 0 || h.body["move"]["to"] == 2);

  auto lose = svc.hint(create_id(svc, R"({"variant":"plain","vertices":3,"edges":[[0,1],[1,2]],"token":0})"));
  EXPECT_EQ(lose.body["reason"], "no winning move");
  EXPECT_TRUE(lose.body["move"].is_null());

  GameService tight(ServiceConfig{SolveBudget{20, 1000}, std::nullopt});
  Json big{{"variant", "sum"}, {"components", Json::array()}};
  for (int i = 0; i < 2; ++i) {
    Json k = variant_to_json(make_plain(make_position(oracle::complete(8), 0)));
    k.erase("variant");
    big["components"].push_back(k);
  }
  auto over = tight.hint(create_id(tight, big.dump()));
  EXPECT_EQ(over.body["reason"], "needs_nimber");
  EXPECT_EQ(over.body["advice_quality"], "heuristic");
}

TEST(Service, AiReplies) {
  GameService svc;
  std::string path5 = R"({"variant":"plain","vertices":5,"edges":[[0,1],[1,2],[2,3],[3,4]],"token":0})";
  std::string id = create_id(svc, with_ai(path5, "[1]"));
  auto r = svc.move(id, R"({"type":"traverse","to":1})");
  ASSERT_EQ(r.status, 200);
  ASSERT_FALSE(r.body["ai_reply"].is_null());
  EXPECT_EQ(r.body["ai_reply"]["advice_quality"], "exact");
  EXPECT_EQ(r.body["to_move"], 0);
  EXPECT_EQ(r.body["history"].size(), 2u);

  // An AI first player moves during creation.
  auto c = svc.create(with_ai(kPath3, "[0]"));
  EXPECT_EQ(c.body["history"].size(), 1u);
  EXPECT_TRUE(c.body["terminal"].get<bool>());
  EXPECT_EQ(c.body["winner"], 0);

  GameService tight(ServiceConfig{SolveBudget{5, 1000}, std::nullopt});
  std::string mt = R"({"variant":"multitoken","vertices":8,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,0]],"tokens":[0,4]})";
  auto h = tight.create(with_ai(mt, "[0]"));
  ASSERT_EQ(h.status, 201);
  ASSERT_FALSE(h.body["ai_replies"].empty());
  EXPECT_EQ(h.body["ai_replies"][0]["advice_quality"], "heuristic");
  EXPECT_TRUE(h.body["ai_replies"][0].contains("warning"));
}

VariantState random_state(std::mt19937_64& rng) {
  auto plain = [&](std::size_t max_n) {
    std::size_t n = 2 + rng() % (max_n - 1);
    return make_plain(make_position(random_graph(n, 0.45, rng), static_cast<Vertex>(rng() % n)));
  };
  switch (rng() % 5) {
    case 0: return plain(9);
    case 1: return SumState{{plain(6), plain(6)}};
    case 2: {
      std::uint32_t k = rng() % 3;
      return PassState{plain(8), k, k};
    }
    case 3: {
      PlainState p = plain(8);
      Vertex other = (p.token + 1) % static_cast<Vertex>(p.graph->vertex_count());
      return MultiTokenState{p.graph, {p.token, other}, p.mask};
    }
    default: {
      SwapUnoState s;
      for (auto& hand : s.hands)
        for (std::size_t i = rng() % 4; i > 0; --i)
          hand.push_back(Card{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)});
      return s;
    }
  }
}

// Every hinted move leads to a value-0 child; "no winning move" means no
// child has value 0.
TEST(Service, HintSoundness) {
  std::mt19937_64 rng(21);
  GameService svc;
  for (int trial = 0; trial < 300; ++trial) {
    VariantState s = random_state(rng);
    std::string id = create_id(svc, variant_to_json(s).dump());
    auto h = svc.hint(id);
    ASSERT_EQ(h.status, 200);
    if (!h.body["move"].is_null()) {
      VariantState child = apply_move(s, move_from_json(h.body["move"]));
      ASSERT_TRUE(variant_grundy(child).is_zero()) << variant_to_json(s).dump();
    } else {
      ASSERT_EQ(h.body["reason"], "no winning move");
      for (const auto& child : options(s)) ASSERT_FALSE(variant_grundy(child).is_zero());
    }
  }
}

TEST(Service, ReplayDeterminism) {
  std::mt19937_64 rng(22);
  GameService svc;
  for (int trial = 0; trial < 1000; ++trial) {
    VariantState s = random_state(rng);
    std::string ai = trial % 3 == 0 ? "[1]" : "[]";
    std::string id = create_id(svc, with_ai(variant_to_json(s).dump(), ai));
    for (int step = 0; step < 12; ++step) {
      auto cur = svc.get(id).body;
      if (cur["terminal"].get<bool>()) break;
      const auto& legal = cur["legal_moves"];
      ASSERT_EQ(svc.move(id, legal[rng() % legal.size()].dump()).status, 200);
    }
    auto live = svc.get(id).body;
    auto replayed = GameService::replay(*svc.snapshot(id));
    ASSERT_EQ(replayed, live);
  }
}

TEST(Service, SnapshotsSurviveRestart) {
  auto dir = std::filesystem::temp_directory_path() / ("ugeo-snap-" + std::to_string(std::random_device{}()));
  std::string id;
  Json before;
  {
    GameService svc(ServiceConfig{{}, dir});
    id = create_id(svc, R"({"variant":"plain","vertices":4,"edges":[[0,1],[1,2],[2,3]],"token":0})");
    ASSERT_EQ(svc.move(id, R"({"type":"traverse","to":1})").status, 200);
    before = svc.get(id).body;
  }
  GameService again(ServiceConfig{{}, dir});
  auto after = again.get(id);
  ASSERT_EQ(after.status, 200);
  EXPECT_EQ(after.body, before);
  std::filesystem::remove_all(dir);
}

TEST(Service, ConcurrentSessions) {
  GameService svc;
  std::string shared = create_id(svc, R"({"variant":"plain","vertices":12,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8],[8,9],[9,10],[10,11]],"token":0})");
  std::vector<std::thread> threads;
  std::atomic<int> accepted{0};
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      std::string own = create_id(svc, kPath3);
      svc.move(own, R"({"type":"traverse","to":0})");
      svc.hint(shared);
      // Racing movers: exactly one wins each ply.
      for (int v = 1; v < 12; ++v)
        if (svc.move(shared, R"({"type":"traverse","to":)" + std::to_string(v) + "}").status == 200)
          ++accepted;
      (void)t;
    });
  for (auto& th : threads) th.join();
  EXPECT_EQ(accepted.load(), 11);
  EXPECT_TRUE(svc.get(shared).body["terminal"].get<bool>());
  EXPECT_EQ(svc.health().body["sessions"], 9);
}

}  // namespace
}  // namespace ugeo
