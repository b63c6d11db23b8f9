#pragma once

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ugeo/errors.hpp"
#include "ugeo/variants.hpp"
#include "ugeo/variants_io.hpp"

namespace ugeo {

// Outcome of analysing the player to move.
struct Advice {
  enum class Status { winning, losing, unknown };
  Status status = Status::unknown;
  std::optional<Move> move;  // set iff winning
};

// A move to a value-0 child when one is provably available. Plain and
// even-pass positions use one matching computation; everything else asks
// fast_variant_solve about each child and falls back to a budgeted exact
// search for children it cannot classify.
inline Advice advise(const VariantState& state, SolveBudget budget) {
  auto matching_advice = [](const PlainState& p) {
    Determination d = determine(*p.graph, p.mask, p.token);
    if (!d.winnable) return Advice{Advice::Status::losing, std::nullopt};
    return Advice{Advice::Status::winning, Move(Traverse{*d.winning_move})};
  };
  if (const auto* p = std::get_if<PlainState>(&state)) return matching_advice(*p);
  if (const auto* p = std::get_if<PassState>(&state); p && p->passes_remaining % 2 == 0)
    return matching_advice(p->game);

  std::vector<Move> unresolved;
  for (const Move& m : legal_moves(state)) {
    FastSolve r = fast_variant_solve(apply_move(state, m), budget);
    if (!r.winnable) {
      unresolved.push_back(m);
      continue;
    }
    if (!*r.winnable) return Advice{Advice::Status::winning, m};
  }
  if (unresolved.empty()) return Advice{Advice::Status::losing, std::nullopt};
  bool gave_up = false;
  for (const Move& m : unresolved) {
    try {
      if (VariantSolver(budget).solve(apply_move(state, m)).is_zero())
        return Advice{Advice::Status::winning, m};
    } catch (const BudgetExceeded&) {
      gave_up = true;
    }
  }
  return Advice{gave_up ? Advice::Status::unknown : Advice::Status::losing, std::nullopt};
}

struct ServiceConfig {
  SolveBudget ai_budget{2'000'000, 5'000};
  std::optional<std::filesystem::path> snapshot_dir;
};

struct ServiceResponse {
  int status = 200;
  Json body;
};

class GameService {
 public:
  explicit GameService(ServiceConfig config = {}) : config_(std::move(config)) {
    if (config_.snapshot_dir) {
      std::filesystem::create_directories(*config_.snapshot_dir);
      load_snapshots();
    }
  }

  // POST /api/games. Body: {"game": <variant envelope>, "ai_players": [..]},
  // or a bare envelope.
  ServiceResponse create(const std::string& body) {
    return guarded([&] {
      Json req = parse_body(body);
      const Json& game = req.contains("game") ? req.at("game") : req;
      auto session = std::make_shared<Session>();
      session->initial = variant_from_json(game);
      session->state = session->initial;
      if (req.contains("ai_players")) {
        if (!req.at("ai_players").is_array()) throw ParseError("malformed_syntax", "\"ai_players\" must be an array");
        for (const auto& p : req.at("ai_players")) {
          if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
            throw InvalidGraph("invariant_violation", "ai_players entries must be 0 or 1");
          session->ai_players.insert(p.get<int>());
        }
      }
      if (const auto* uno = std::get_if<SwapUnoState>(&session->state)) session->initial_to_move = uno->to_move;
      session->to_move = session->initial_to_move;
      session->id = new_id();
      session->created_at = now_iso8601();
      {
        std::unique_lock lock(store_mu_);
        sessions_[session->id] = session;
      }
      {
        std::lock_guard lock(session->mu);
        persist_locked(*session);
      }
      Json replies = play_ai(*session);
      std::lock_guard lock(session->mu);
      Json out = summary_locked(*session);
      out["ai_replies"] = std::move(replies);
      return ServiceResponse{201, std::move(out)};
    });
  }

  // GET /api/games/{id}
  ServiceResponse get(const std::string& id) {
    return guarded([&] {
      auto s = find(id);
      if (!s) return not_found(id);
      std::lock_guard lock(s->mu);
      return ServiceResponse{200, summary_locked(*s)};
    });
  }

  // POST /api/games/{id}/moves. Body: {"move": <move>} or a bare move.
  ServiceResponse move(const std::string& id, const std::string& body) {
    return guarded([&] {
      auto s = find(id);
      if (!s) return not_found(id);
      Json req = parse_body(body);
      Move m = move_from_json(req.contains("move") ? req.at("move") : req);
      {
        std::lock_guard lock(s->mu);
        if (is_terminal(s->state)) throw IllegalMove("game is over");
        if (s->ai_players.count(s->to_move)) throw IllegalMove("it is the AI player's turn");
        apply_locked(*s, m);
      }
      Json replies = play_ai(*s);
      std::lock_guard lock(s->mu);
      Json out = summary_locked(*s);
      out["ai_reply"] = replies.empty() ? Json(nullptr) : replies.back();
      out["ai_replies"] = std::move(replies);
      return ServiceResponse{200, std::move(out)};
    });
  }

  // GET /api/games/{id}/hint
  ServiceResponse hint(const std::string& id) {
    return guarded([&] {
      auto s = find(id);
      if (!s) return not_found(id);
      VariantState snapshot;
      {
        std::lock_guard lock(s->mu);
        snapshot = s->state;
      }
      Json out{{"move", nullptr}};
      if (is_terminal(snapshot)) {
        out["reason"] = "no winning move";
        out["advice_quality"] = "exact";
        return ServiceResponse{200, std::move(out)};
      }
      Advice a = advise(snapshot, config_.ai_budget);
      switch (a.status) {
        case Advice::Status::winning:
          out["move"] = move_to_json(*a.move);
          out["reason"] = "winning_move";
          out["advice_quality"] = "exact";
          break;
        case Advice::Status::losing:
          out["reason"] = "no winning move";
          out["advice_quality"] = "exact";
          break;
        case Advice::Status::unknown:
          out["reason"] = "needs_nimber";
          out["advice_quality"] = "heuristic";
          break;
      }
      return ServiceResponse{200, std::move(out)};
    });
  }

  // GET /api/health
  ServiceResponse health() {
    std::shared_lock lock(store_mu_);
    return ServiceResponse{200, Json{{"status", "ok"}, {"sessions", sessions_.size()}}};
  }

  // Snapshot document of a session: enough to rebuild it by replay.
  std::optional<Json> snapshot(const std::string& id) {
    auto s = find(id);
    if (!s) return std::nullopt;
    std::lock_guard lock(s->mu);
    return snapshot_locked(*s);
  }

  // Rebuilds a session from its snapshot by replaying the history; returns
  // the resulting summary (without registering the session).
  static Json replay(const Json& snap) {
    Session s;
    restore(s, snap);
    return summary_locked(s);
  }

 private:
  struct Session {
    std::string id;
    VariantState initial, state;
    int initial_to_move = 0;
    int to_move = 0;
    std::vector<Move> history;
    std::set<int> ai_players;
    std::string created_at;
    std::uint64_t version = 0;
    std::mutex mu;
  };

  template <class F>
  static ServiceResponse guarded(F&& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      return error_response(400, e);
    } catch (const IllegalMove& e) {
      return error_response(409, e);
    } catch (const Error& e) {
      return error_response(422, e);
    }
  }

  static ServiceResponse error_response(int status, const Error& e) {
    return ServiceResponse{status, Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}};
  }

  static ServiceResponse not_found(const std::string& id) {
    return ServiceResponse{404, Json{{"error", {{"kind", "not_found"}, {"message", "no game " + id}}}}};
  }

  static Json parse_body(const std::string& body) {
    try {
      return Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ParseError("malformed_syntax", std::string("request body is not JSON: ") + e.what());
    }
  }

  static std::string now_iso8601() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::string new_id() {
    std::lock_guard lock(rng_mu_);
    std::ostringstream out;
    out << std::hex;
    for (int i = 0; i < 2; ++i) out << (rng_() | (std::uint64_t{1} << 63));
    return out.str().substr(0, 24);
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::shared_lock lock(store_mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
  }

  static void advance_locked(Session& s, const Move& m) {
    s.state = apply_move(s.state, m);
    s.history.push_back(m);
    s.to_move = 1 - s.to_move;
    ++s.version;
  }

  void apply_locked(Session& s, const Move& m) {
    advance_locked(s, m);
    persist_locked(s);
  }

  // Plays AI moves until a human is to move or the game ends. Solving runs
  // on a copy of the state outside the session lock; the move is dropped if
  // the session changed meanwhile.
  Json play_ai(Session& s) {
    Json replies = Json::array();
    while (true) {
      VariantState snapshot;
      std::uint64_t version;
      {
        std::lock_guard lock(s.mu);
        if (!s.ai_players.count(s.to_move) || is_terminal(s.state)) break;
        snapshot = s.state;
        version = s.version;
      }
      Json reply = choose_ai_move(snapshot);
      std::lock_guard lock(s.mu);
      if (s.version != version) break;
      apply_locked(s, move_from_json(reply.at("move")));
      replies.push_back(std::move(reply));
    }
    return replies;
  }

  Json choose_ai_move(const VariantState& state) const {
    Advice a = advise(state, config_.ai_budget);
    Json reply;
    if (a.status == Advice::Status::winning) {
      reply["move"] = move_to_json(*a.move);
      reply["advice_quality"] = "exact";
    } else {
      reply["move"] = move_to_json(legal_moves(state).front());
      if (a.status == Advice::Status::losing) {
        reply["advice_quality"] = "exact";
      } else {
        reply["advice_quality"] = "heuristic";
        reply["warning"] = "no exact analysis within the AI budget; playing the first legal move";
      }
    }
    return reply;
  }

  static Json summary_locked(const Session& s) {
    Json history = Json::array();
    for (const Move& m : s.history) history.push_back(move_to_json(m));
    Json legal = Json::array();
    for (const Move& m : legal_moves(s.state)) legal.push_back(move_to_json(m));
    const bool terminal = legal.empty();
    return Json{{"id", s.id},
                {"variant", variant_name(s.state)},
                {"state", variant_to_json(s.state)},
                {"to_move", s.to_move},
                {"history", std::move(history)},
                {"ai_players", s.ai_players},
                {"created_at", s.created_at},
                {"terminal", terminal},
                {"winner", terminal ? Json(1 - s.to_move) : Json(nullptr)},
                {"legal_moves", std::move(legal)}};
  }

  static Json snapshot_locked(const Session& s) {
    Json history = Json::array();
    for (const Move& m : s.history) history.push_back(move_to_json(m));
    return Json{{"id", s.id},
                {"initial", variant_to_json(s.initial)},
                {"initial_to_move", s.initial_to_move},
                {"ai_players", s.ai_players},
                {"created_at", s.created_at},
                {"history", std::move(history)}};
  }

  static void restore(Session& s, const Json& snap) {
    s.id = snap.at("id").get<std::string>();
    s.initial = variant_from_json(snap.at("initial"));
    s.state = s.initial;
    s.initial_to_move = snap.at("initial_to_move").get<int>();
    s.to_move = s.initial_to_move;
    for (const auto& p : snap.at("ai_players")) s.ai_players.insert(p.get<int>());
    s.created_at = snap.at("created_at").get<std::string>();
    for (const auto& m : snap.at("history")) advance_locked(s, move_from_json(m));
  }

  void persist_locked(const Session& s) const {
    if (!config_.snapshot_dir) return;
    auto path = *config_.snapshot_dir / (s.id + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << snapshot_locked(s).dump();
    }
    std::filesystem::rename(tmp, path);
  }

  void load_snapshots() {
    for (const auto& entry : std::filesystem::directory_iterator(*config_.snapshot_dir)) {
      if (entry.path().extension() != ".json") continue;
      std::ifstream in(entry.path());
      auto s = std::make_shared<Session>();
      try {
        restore(*s, Json::parse(in));
      } catch (const std::exception&) {
        continue;  // unreadable snapshots are skipped, not fatal
      }
      sessions_[s->id] = s;
    }
  }

  ServiceConfig config_;
  std::shared_mutex store_mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex rng_mu_;
  std::mt19937_64 rng_{std::random_device{}()};
};

}  // namespace ugeo
