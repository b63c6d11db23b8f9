#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ugeo/degree3.hpp"
#include "ugeo/errors.hpp"
#include "ugeo/exact.hpp"
#include "ugeo/graph.hpp"
#include "ugeo/matching.hpp"
#include "ugeo/nimber.hpp"
#include "ugeo/uno.hpp"

namespace ugeo {

// Graphs are shared between a state and all of its descendants; only the
// mask and token(s) change.
struct PlainState {
  std::shared_ptr<const Graph> graph;
  Vertex token = 0;
  VertexMask mask;
};

struct SumState {
  std::vector<PlainState> parts;
};

// passes_remaining is the shared pool left for both players.
struct PassState {
  PlainState game;
  std::uint32_t passes_remaining = 0;
  std::uint32_t passes_total = 0;
};

// Token identity is its index; occupied vertices are live but blocked.
struct MultiTokenState {
  std::shared_ptr<const Graph> graph;
  std::vector<Vertex> tokens;
  VertexMask mask;
};

using VariantState = std::variant<PlainState, SumState, PassState, MultiTokenState, SwapUnoState>;

inline constexpr std::size_t kMaxTokens = 8;

inline PlainState make_plain(Position p) {
  VertexMask mask(p.graph.vertex_count());
  return PlainState{std::make_shared<const Graph>(std::move(p.graph)), p.token, std::move(mask)};
}

inline PlainState make_plain(Position p, VertexMask mask) {
  return PlainState{std::make_shared<const Graph>(std::move(p.graph)), p.token, std::move(mask)};
}

inline Position to_position(const PlainState& s) { return Position{*s.graph, s.token}; }

inline const char* variant_name(const VariantState& s) {
  static constexpr const char* kNames[] = {"plain", "sum", "pass", "multitoken", "swapuno"};
  return kNames[s.index()];
}

namespace detail {

inline void invariant(bool ok, const std::string& what) {
  if (!ok) throw InvalidGraph("invariant_violation", what);
}

inline void validate_plain(const PlainState& s, const std::string& where) {
  invariant(s.graph != nullptr, where + ": missing graph");
  invariant(s.mask.size() == s.graph->vertex_count(), where + ": mask size differs from vertex count");
  invariant(s.token < s.graph->vertex_count(), where + ": token " + std::to_string(s.token) +
                                                   " outside [0, " +
                                                   std::to_string(s.graph->vertex_count()) + ")");
  invariant(s.mask.alive(s.token), where + ": token vertex is removed");
}

}  // namespace detail

// Throws InvalidGraph("invariant_violation") when a state breaks its
// variant's invariants.
inline void validate(const VariantState& state) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          detail::validate_plain(s, "plain");
        } else if constexpr (std::is_same_v<T, SumState>) {
          detail::invariant(!s.parts.empty(), "sum: needs at least one component");
          for (std::size_t i = 0; i < s.parts.size(); ++i)
            detail::validate_plain(s.parts[i], "sum component " + std::to_string(i));
        } else if constexpr (std::is_same_v<T, PassState>) {
          detail::validate_plain(s.game, "pass");
          detail::invariant(s.passes_remaining <= s.passes_total,
                            "pass: passes_remaining exceeds passes_total");
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          detail::invariant(s.graph != nullptr, "multitoken: missing graph");
          detail::invariant(s.mask.size() == s.graph->vertex_count(), "multitoken: mask size differs");
          detail::invariant(!s.tokens.empty() && s.tokens.size() <= kMaxTokens,
                            "multitoken: between 1 and 8 tokens");
          std::set<Vertex> seen;
          for (Vertex t : s.tokens) {
            detail::invariant(t < s.graph->vertex_count(),
                              "multitoken: token " + std::to_string(t) + " out of range");
            detail::invariant(s.mask.alive(t), "multitoken: token on a removed vertex");
            detail::invariant(seen.insert(t).second, "multitoken: tokens must be distinct");
          }
        } else {
          detail::invariant(s.to_move == 0 || s.to_move == 1, "swapuno: to_move must be 0 or 1");
        }
      },
      state);
}

struct Traverse {
  Vertex to = 0;
  friend bool operator==(const Traverse&, const Traverse&) = default;
};
struct MultiTraverse {
  std::uint32_t token_index = 0;
  Vertex to = 0;
  friend bool operator==(const MultiTraverse&, const MultiTraverse&) = default;
};
struct PassMove {
  friend bool operator==(const PassMove&, const PassMove&) = default;
};
struct SwapMove {
  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};
struct ComponentMove {
  std::uint32_t component = 0;
  Vertex to = 0;
  friend bool operator==(const ComponentMove&, const ComponentMove&) = default;
};
struct UnoPlay {
  Card card;
  friend bool operator==(const UnoPlay&, const UnoPlay&) = default;
};

using Move = std::variant<Traverse, MultiTraverse, PassMove, SwapMove, ComponentMove, UnoPlay>;

namespace detail {

inline std::vector<Vertex> live_moves(const PlainState& s) {
  return neighbors_alive(*s.graph, s.token, s.mask);
}

inline PlainState advance(const PlainState& s, Vertex to) {
  PlainState next = s;
  next.mask.remove(s.token);
  next.token = to;
  return next;
}

}  // namespace detail

// Every legal move, in a fixed order. Identical Uno cards yield one move.
inline std::vector<Move> legal_moves(const VariantState& state) {
  std::vector<Move> out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          for (Vertex v : detail::live_moves(s)) out.emplace_back(Traverse{v});
        } else if constexpr (std::is_same_v<T, SumState>) {
          for (std::uint32_t i = 0; i < s.parts.size(); ++i)
            for (Vertex v : detail::live_moves(s.parts[i])) out.emplace_back(ComponentMove{i, v});
        } else if constexpr (std::is_same_v<T, PassState>) {
          for (Vertex v : detail::live_moves(s.game)) out.emplace_back(Traverse{v});
          if (s.passes_remaining > 0) out.emplace_back(PassMove{});
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          std::set<Vertex> occupied(s.tokens.begin(), s.tokens.end());
          for (std::uint32_t i = 0; i < s.tokens.size(); ++i)
            for (Vertex v : neighbors_alive(*s.graph, s.tokens[i], s.mask))
              if (!occupied.count(v)) out.emplace_back(MultiTraverse{i, v});
        } else {
          std::set<Card> playable;
          for (const Card& c : s.hands[s.to_move])
            if (!s.top || cards_match(*s.top, c)) playable.insert(c);
          for (const Card& c : playable) out.emplace_back(UnoPlay{c});
          if (!s.swap_used) out.emplace_back(SwapMove{});
        }
      },
      state);
  return out;
}

inline bool is_terminal(const VariantState& s) { return legal_moves(s).empty(); }

// Throws IllegalMove unless m is among legal_moves(state).
inline VariantState apply_move(const VariantState& state, const Move& m) {
  auto legal = legal_moves(state);
  if (std::find(legal.begin(), legal.end(), m) == legal.end())
    throw IllegalMove(std::string("move is not legal in this ") + variant_name(state) + " position");
  return std::visit(
      [&](const auto& s) -> VariantState {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          return detail::advance(s, std::get<Traverse>(m).to);
        } else if constexpr (std::is_same_v<T, SumState>) {
          const auto& cm = std::get<ComponentMove>(m);
          SumState next = s;
          next.parts[cm.component] = detail::advance(s.parts[cm.component], cm.to);
          return next;
        } else if constexpr (std::is_same_v<T, PassState>) {
          PassState next = s;
          if (std::holds_alternative<PassMove>(m))
            --next.passes_remaining;
          else
            next.game = detail::advance(s.game, std::get<Traverse>(m).to);
          return next;
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          const auto& mt = std::get<MultiTraverse>(m);
          MultiTokenState next = s;
          next.mask.remove(s.tokens[mt.token_index]);
          next.tokens[mt.token_index] = mt.to;
          return next;
        } else {
          SwapUnoState next = s;
          if (std::holds_alternative<SwapMove>(m)) {
            std::swap(next.hands[0], next.hands[1]);
            next.swap_used = true;
          } else {
            const Card& c = std::get<UnoPlay>(m).card;
            auto& hand = next.hands[s.to_move];
            hand.erase(std::find(hand.begin(), hand.end(), c));
            next.top = c;
          }
          next.to_move = 1 - s.to_move;
          return next;
        }
      },
      state);
}

namespace detail {

inline void put(std::string& key, std::uint64_t x) {
  key.append(reinterpret_cast<const char*>(&x), sizeof x);
}

inline void put_plain(std::string& key, const PlainState& s) {
  put(key, s.token);
  for (auto w : s.mask.words()) put(key, w);
}

inline void put_hand(std::string& key, std::vector<Card> hand) {
  std::sort(hand.begin(), hand.end());
  put(key, hand.size());
  for (const Card& c : hand) {
    put(key, static_cast<std::uint64_t>(c.color));
    put(key, static_cast<std::uint64_t>(c.rank));
  }
}

}  // namespace detail

// Identifies a state among the descendants of one root (graphs are not
// part of the key). Uno keys are relative to the player to move.
inline std::string state_key(const VariantState& state) {
  std::string key(1, static_cast<char>('0' + state.index()));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          detail::put_plain(key, s);
        } else if constexpr (std::is_same_v<T, SumState>) {
          for (const auto& p : s.parts) detail::put_plain(key, p);
        } else if constexpr (std::is_same_v<T, PassState>) {
          detail::put_plain(key, s.game);
          detail::put(key, s.passes_remaining);
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          for (Vertex t : s.tokens) detail::put(key, t);
          for (auto w : s.mask.words()) detail::put(key, w);
        } else {
          detail::put_hand(key, s.hands[s.to_move]);
          detail::put_hand(key, s.hands[1 - s.to_move]);
          detail::put(key, s.top ? 1 : 0);
          if (s.top) detail::put_hand(key, {*s.top});
          detail::put(key, s.swap_used ? 1 : 0);
        }
      },
      state);
  return key;
}

// Children of the state, without duplicates; empty iff terminal.
inline std::vector<VariantState> options(const VariantState& state) {
  std::vector<VariantState> out;
  std::set<std::string> seen;
  for (const Move& m : legal_moves(state)) {
    VariantState child = apply_move(state, m);
    if (seen.insert(state_key(child)).second) out.push_back(std::move(child));
  }
  return out;
}

// Memoized mex recursion over options(). The memo lives for one call.
class VariantSolver {
 public:
  explicit VariantSolver(SolveBudget budget = {}) : meter_(budget) {}

  Nimber solve(const VariantState& s) {
    std::string key = state_key(s);
    if (auto it = memo_.find(key); it != memo_.end()) return Nimber(it->second);
    meter_.tick();
    std::vector<Nimber> values;
    for (const auto& child : options(s)) values.push_back(solve(child));
    Nimber v = mex(values);
    memo_.emplace(std::move(key), v.value());
    return v;
  }

  std::uint64_t states_visited() const { return meter_.states(); }

 private:
  BudgetMeter meter_;
  std::unordered_map<std::string, std::uint32_t> memo_;
};

inline Nimber variant_grundy(const VariantState& s, SolveBudget budget = {}) {
  validate(s);
  return VariantSolver(budget).solve(s);
}

// Swap Uno as Uncooperative Uno (its playability graph, token on the top
// card or the free-opening vertex) plus a * for the unused swap.
inline VariantState swap_uno_to_ug(const SwapUnoState& s) {
  PlainState play = make_plain(uno_playability_position(s));
  if (s.swap_used) return play;
  std::vector<Edge> edge{{0, 1}};
  return SumState{{std::move(play), make_plain(make_position(Graph::from_edges(2, edge), 0))}};
}

struct FastSolve {
  std::optional<bool> winnable;  // nullopt only with method "needs_nimber"
  std::optional<Nimber> value;
  std::string method;  // matching | matching+degree3 | degree3 | exact | needs_nimber
};

namespace detail {

inline std::size_t live_max_degree(const Graph& g, const VertexMask& mask) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mask.alive(v)) best = std::max(best, live_degree(g, v, mask));
  return best;
}

struct ComponentValue {
  Nimber value;
  bool exact;  // false: degree-3 algorithm
};

inline std::optional<ComponentValue> component_nimber(const PlainState& s, SolveBudget budget) {
  if (live_max_degree(*s.graph, s.mask) <= 3)
    return ComponentValue{grundy_degree3(to_position(s), s.mask), false};
  try {
    return ComponentValue{exact_grundy(to_position(s), s.mask, budget), true};
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

inline FastSolve from_value(Nimber v, const char* method) {
  return FastSolve{!v.is_zero(), v, method};
}

inline FastSolve sum_solve(const std::vector<PlainState>& parts, Nimber offset, SolveBudget budget) {
  Nimber total = offset;
  bool any_exact = false;
  for (const auto& p : parts) {
    auto cv = component_nimber(p, budget);
    if (!cv) return FastSolve{std::nullopt, std::nullopt, "needs_nimber"};
    total = total ^ cv->value;
    any_exact = any_exact || cv->exact;
  }
  return from_value(total, any_exact ? "exact" : "degree3");
}

}  // namespace detail

// Cheapest sound method per variant. Plain and even-k Pass positions are
// decided by matching alone; Pass with odd k, sums and Swap Uno need
// component nimbers; multi-token positions need a full search.
inline FastSolve fast_variant_solve(const VariantState& state, SolveBudget budget = {}) {
  validate(state);
  return std::visit(
      [&](const auto& s) -> FastSolve {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          bool win = is_winnable(*s.graph, s.mask, s.token);
          if (detail::live_max_degree(*s.graph, s.mask) > 3) return FastSolve{win, std::nullopt, "matching"};
          return FastSolve{win, grundy_degree3(to_position(s), s.mask), "matching+degree3"};
        } else if constexpr (std::is_same_v<T, SumState>) {
          return detail::sum_solve(s.parts, Nimber(0), budget);
        } else if constexpr (std::is_same_v<T, PassState>) {
          if (s.passes_remaining % 2 == 0)
            return FastSolve{is_winnable(*s.game.graph, s.game.mask, s.game.token), std::nullopt, "matching"};
          return detail::sum_solve({s.game}, Nimber(1), budget);
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          try {
            return detail::from_value(VariantSolver(budget).solve(s), "exact");
          } catch (const BudgetExceeded&) {
            return FastSolve{std::nullopt, std::nullopt, "needs_nimber"};
          }
        } else {
          VariantState image = swap_uno_to_ug(s);
          if (auto* plain = std::get_if<PlainState>(&image)) return detail::sum_solve({*plain}, Nimber(0), budget);
          return detail::sum_solve(std::get<SumState>(image).parts, Nimber(0), budget);
        }
      },
      state);
}

}  // namespace ugeo
