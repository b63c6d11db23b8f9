#pragma once

#include "json.hpp"

#include <string>

#include "ugeo/errors.hpp"
#include "ugeo/variants.hpp"

// Variant JSON envelope:
//   plain       {"variant":"plain","vertices":N,"edges":[[u,v],...],"token":t,"removed":[...]}
//   sum         {"variant":"sum","components":[<plain body>,...]}
//   pass        <plain body> + "passes_remaining":r, "passes_total":k
//   multitoken  {"variant":"multitoken","vertices":N,"edges":[...],"tokens":[...],"removed":[...]}
//   swapuno     {"variant":"swapuno","hands":[[{"color":c,"rank":r},...],[...]],
//                "top":null|{"color":c,"rank":r},"swap_used":false,"to_move":0}
// "removed", "passes_total", "top", "swap_used" and "to_move" are optional
// on input. Shape errors raise ParseError("malformed_syntax"); invariant
// violations raise InvalidGraph.

namespace ugeo {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_shape(const std::string& what) {
  throw ParseError("malformed_syntax", what);
}

inline std::int64_t get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    bad_shape(std::string("\"") + key + "\" must be an integer");
  return j.at(key).get<std::int64_t>();
}

inline std::uint32_t get_count(const Json& j, const char* key) {
  auto v = get_int(j, key);
  if (v < 0 || v > static_cast<std::int64_t>(kMaxVertices))
    throw InvalidGraph("out_of_range", std::string("\"") + key + "\" out of range");
  return static_cast<std::uint32_t>(v);
}

inline std::vector<std::int64_t> get_int_list(const Json& j, const char* key) {
  std::vector<std::int64_t> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) bad_shape(std::string("\"") + key + "\" must be an array");
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer()) bad_shape(std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

inline Vertex checked_vertex(std::int64_t v, std::size_t n, const char* what) {
  if (v < 0 || static_cast<std::uint64_t>(v) >= n)
    throw InvalidGraph("out_of_range", std::string(what) + " " + std::to_string(v) +
                                           " outside [0, " + std::to_string(n) + ")");
  return static_cast<Vertex>(v);
}

inline std::shared_ptr<const Graph> graph_from_json(const Json& j) {
  const std::uint32_t n = get_count(j, "vertices");
  if (!j.contains("edges") || !j.at("edges").is_array()) bad_shape("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      bad_shape("each edge must be a pair of integers");
    edges.emplace_back(checked_vertex(e[0].get<std::int64_t>(), n, "edge endpoint"),
                       checked_vertex(e[1].get<std::int64_t>(), n, "edge endpoint"));
  }
  return std::make_shared<const Graph>(Graph::from_edges(n, edges));
}

inline VertexMask mask_from_json(const Json& j, std::size_t n) {
  VertexMask mask(n);
  for (auto v : get_int_list(j, "removed")) mask.remove(checked_vertex(v, n, "removed vertex"));
  return mask;
}

inline PlainState plain_from_json(const Json& j) {
  if (!j.is_object()) bad_shape("component must be an object");
  auto g = graph_from_json(j);
  VertexMask mask = mask_from_json(j, g->vertex_count());
  Vertex token = checked_vertex(get_int(j, "token"), g->vertex_count(), "token");
  return PlainState{std::move(g), token, std::move(mask)};
}

inline Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Json plain_json(const PlainState& s) {
  Json j = graph_json(*s.graph);
  j["token"] = s.token;
  j["removed"] = s.mask.removed_list();
  return j;
}

inline Card card_from_json(const Json& j) {
  if (!j.is_object()) bad_shape("card must be an object with color and rank");
  return Card{get_int(j, "color"), get_int(j, "rank")};
}

inline Json card_json(const Card& c) { return Json{{"color", c.color}, {"rank", c.rank}}; }

}  // namespace detail

inline Json hand_json(const std::vector<Card>& hand) {
  Json out = Json::array();
  for (const Card& c : hand) out.push_back(detail::card_json(c));
  return out;
}

inline Json variant_to_json(const VariantState& state) {
  Json j = std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlainState>) {
          return detail::plain_json(s);
        } else if constexpr (std::is_same_v<T, SumState>) {
          Json parts = Json::array();
          for (const auto& p : s.parts) parts.push_back(detail::plain_json(p));
          return Json{{"components", std::move(parts)}};
        } else if constexpr (std::is_same_v<T, PassState>) {
          Json j = detail::plain_json(s.game);
          j["passes_remaining"] = s.passes_remaining;
          j["passes_total"] = s.passes_total;
          return j;
        } else if constexpr (std::is_same_v<T, MultiTokenState>) {
          Json j = detail::graph_json(*s.graph);
          j["tokens"] = s.tokens;
          j["removed"] = s.mask.removed_list();
          return j;
        } else {
          Json j{{"hands", Json::array({hand_json(s.hands[0]), hand_json(s.hands[1])})},
                 {"top", s.top ? detail::card_json(*s.top) : Json(nullptr)},
                 {"swap_used", s.swap_used},
                 {"to_move", s.to_move}};
          return j;
        }
      },
      state);
  j["variant"] = variant_name(state);
  return j;
}

inline VariantState variant_from_json(const Json& j) {
  if (!j.is_object()) detail::bad_shape("variant must be a JSON object");
  if (!j.contains("variant") || !j.at("variant").is_string())
    detail::bad_shape("missing \"variant\" tag");
  const std::string tag = j.at("variant").get<std::string>();
  VariantState out;
  if (tag == "plain") {
    out = detail::plain_from_json(j);
  } else if (tag == "sum") {
    if (!j.contains("components") || !j.at("components").is_array())
      detail::bad_shape("\"components\" must be an array");
    SumState s;
    for (const auto& c : j.at("components")) s.parts.push_back(detail::plain_from_json(c));
    out = std::move(s);
  } else if (tag == "pass") {
    PassState s;
    s.game = detail::plain_from_json(j);
    auto remaining = detail::get_int(j, "passes_remaining");
    auto total = j.contains("passes_total") ? detail::get_int(j, "passes_total") : remaining;
    if (remaining < 0 || total < 0 || total > (std::int64_t{1} << 31))
      throw InvalidGraph("invariant_violation", "pass counts must be non-negative");
    s.passes_remaining = static_cast<std::uint32_t>(remaining);
    s.passes_total = static_cast<std::uint32_t>(total);
    out = std::move(s);
  } else if (tag == "multitoken") {
    MultiTokenState s;
    s.graph = detail::graph_from_json(j);
    s.mask = detail::mask_from_json(j, s.graph->vertex_count());
    if (!j.contains("tokens")) detail::bad_shape("missing \"tokens\"");
    for (auto t : detail::get_int_list(j, "tokens"))
      s.tokens.push_back(detail::checked_vertex(t, s.graph->vertex_count(), "token"));
    out = std::move(s);
  } else if (tag == "swapuno") {
    SwapUnoState s;
    if (!j.contains("hands") || !j.at("hands").is_array() || j.at("hands").size() != 2)
      detail::bad_shape("\"hands\" must be an array of two hands");
    for (int h = 0; h < 2; ++h) {
      if (!j.at("hands")[h].is_array()) detail::bad_shape("each hand must be an array");
      for (const auto& c : j.at("hands")[h]) s.hands[h].push_back(detail::card_from_json(c));
    }
    if (j.contains("top") && !j.at("top").is_null()) s.top = detail::card_from_json(j.at("top"));
    if (j.contains("swap_used")) {
      if (!j.at("swap_used").is_boolean()) detail::bad_shape("\"swap_used\" must be a boolean");
      s.swap_used = j.at("swap_used").get<bool>();
    }
    if (j.contains("to_move")) s.to_move = static_cast<int>(detail::get_int(j, "to_move"));
    out = std::move(s);
  } else {
    detail::bad_shape("unknown variant \"" + tag + "\"");
  }
  validate(out);
  return out;
}

// Moves: {"type":"traverse","to":v}, {"type":"multi_traverse","token_index":i,"to":v},
// {"type":"pass"}, {"type":"swap"}, {"type":"component_move","component_index":i,"to":v},
// {"type":"uno_play","card":{"color":c,"rank":r}}.
inline Json move_to_json(const Move& m) {
  return std::visit(
      [](const auto& mv) -> Json {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, Traverse>)
          return Json{{"type", "traverse"}, {"to", mv.to}};
        else if constexpr (std::is_same_v<T, MultiTraverse>)
          return Json{{"type", "multi_traverse"}, {"token_index", mv.token_index}, {"to", mv.to}};
        else if constexpr (std::is_same_v<T, PassMove>)
          return Json{{"type", "pass"}};
        else if constexpr (std::is_same_v<T, SwapMove>)
          return Json{{"type", "swap"}};
        else if constexpr (std::is_same_v<T, ComponentMove>)
          return Json{{"type", "component_move"}, {"component_index", mv.component}, {"to", mv.to}};
        else
          return Json{{"type", "uno_play"}, {"card", detail::card_json(mv.card)}};
      },
      m);
}

inline Move move_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    detail::bad_shape("move must be an object with a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  auto nonneg = [&](const char* key) {
    auto v = detail::get_int(j, key);
    if (v < 0 || v > 0xffffffffLL) throw IllegalMove(std::string("\"") + key + "\" out of range");
    return static_cast<std::uint32_t>(v);
  };
  if (type == "traverse") return Traverse{nonneg("to")};
  if (type == "multi_traverse") return MultiTraverse{nonneg("token_index"), nonneg("to")};
  if (type == "pass") return PassMove{};
  if (type == "swap") return SwapMove{};
  if (type == "component_move") return ComponentMove{nonneg("component_index"), nonneg("to")};
  if (type == "uno_play") {
    if (!j.contains("card")) detail::bad_shape("uno_play needs a \"card\"");
    return UnoPlay{detail::card_from_json(j.at("card"))};
  }
  detail::bad_shape("unknown move type \"" + type + "\"");
}

}  // namespace ugeo
