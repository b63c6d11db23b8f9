#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ugeo/errors.hpp"
#include "ugeo/graph.hpp"

namespace ugeo {

enum class GraphFormat { json, edgelist };

using AnyPosition = std::variant<Position, DirectedPosition>;

namespace detail {

struct TextLocation {
  long line = -1;
  long column = -1;
  long offset = -1;
};

inline TextLocation locate_offset(std::string_view text, std::size_t offset) {
  TextLocation loc;
  if (offset > text.size()) return loc;
  loc.offset = static_cast<long>(offset);
  loc.line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') {
      ++loc.line;
      line_start = i + 1;
    }
  loc.column = static_cast<long>(offset - line_start) + 1;
  return loc;
}

// Minimal skipper over text that is already known to be valid JSON. Used only
// to turn "edges[i]" into a byte offset for diagnostics.
class JsonLocator {
 public:
  explicit JsonLocator(std::string_view s) : s_(s) {}

  std::size_t element_offset(std::string_view key, std::size_t index) {
    i_ = 0;
    ws();
    if (!eat('{')) return npos;
    while (true) {
      ws();
      if (peek() != '"') return npos;
      std::size_t key_begin = i_ + 1;
      skip_string();
      std::string_view k = s_.substr(key_begin, i_ - key_begin - 1);
      ws();
      if (!eat(':')) return npos;
      ws();
      if (k == key) {
        if (!eat('[')) return i_;
        for (std::size_t idx = 0;; ++idx) {
          ws();
          if (peek() == ']') return npos;
          if (idx == index) return i_;
          skip_value();
          ws();
          if (!eat(',')) return npos;
        }
      }
      skip_value();
      ws();
      if (!eat(',')) return npos;
    }
  }

  std::size_t member_offset(std::string_view key) {
    i_ = 0;
    ws();
    if (!eat('{')) return npos;
    while (true) {
      ws();
      if (peek() != '"') return npos;
      std::size_t key_begin = i_;
      skip_string();
      std::string_view k = s_.substr(key_begin + 1, i_ - key_begin - 2);
      if (k == key) return key_begin;
      ws();
      if (!eat(':')) return npos;
      ws();
      skip_value();
      ws();
      if (!eat(',')) return npos;
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void ws() {
    while (i_ < s_.size() &&
           (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r'))
      ++i_;
  }
  void skip_string() {
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') i_ += (s_[i_] == '\\') ? 2 : 1;
    ++i_;
  }
  void skip_value() {
    char c = peek();
    if (c == '"') {
      skip_string();
    } else if (c == '{' || c == '[') {
      int depth = 0;
      do {
        char d = peek();
        if (d == '"') {
          skip_string();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++i_;
      } while (depth > 0 && i_ < s_.size());
    } else {
      while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' &&
             s_[i_] != ' ' && s_[i_] != '\n' && s_[i_] != '\t' && s_[i_] != '\r')
        ++i_;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

[[noreturn]] inline void fail_at(std::string_view text, std::size_t offset,
                                 const std::string& kind, const std::string& msg) {
  auto loc = locate_offset(text, offset == JsonLocator::npos ? text.size() + 1 : offset);
  std::string where;
  if (loc.line >= 0)
    where = " (line " + std::to_string(loc.line) + ", column " +
            std::to_string(loc.column) + ")";
  throw ParseError(kind, msg + where, loc.line, loc.column, loc.offset);
}

// Range, self-loop and duplicate checks shared by both formats. `locate`
// maps an edge index to a byte offset. Undirected edges {u,v} and {v,u}
// collide; directed arcs collide only on identical (tail, head).
template <class Locate>
void validate_pairs(std::string_view text, std::size_t n, const std::vector<Edge>& pairs,
                    bool directed, Locate locate) {
  const char* noun = directed ? "arc " : "edge ";
  std::set<Edge> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u >= n || v >= n)
      fail_at(text, locate(i), "out_of_range",
              std::string(noun) + std::to_string(i) + " references a vertex outside [0, " +
                  std::to_string(n) + ")");
    if (u == v)
      fail_at(text, locate(i), "self_loop",
              std::string(noun) + std::to_string(i) + " is a self-loop");
    Edge key = directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      fail_at(text, locate(i), "duplicate_edge",
              std::string(noun) + std::to_string(i) + " repeats an earlier " + noun);
  }
}

inline AnyPosition parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    fail_at(text, off, "malformed_syntax", std::string("invalid JSON: ") + e.what());
  }
  JsonLocator loc(text);
  auto member_at = [&](std::string_view k) { return loc.member_offset(k); };
  if (!doc.is_object()) fail_at(text, 0, "malformed_syntax", "top-level value must be an object");

  const bool has_edges = doc.contains("edges");
  const bool has_arcs = doc.contains("arcs");
  if (has_edges && has_arcs)
    fail_at(text, member_at("arcs"), "wrong_kind", "both \"edges\" and \"arcs\" present");
  if (!has_edges && !has_arcs)
    fail_at(text, 0, "malformed_syntax", "missing \"edges\" or \"arcs\"");
  for (const char* key : {"vertices", "token"})
    if (!doc.contains(key))
      fail_at(text, 0, "malformed_syntax", std::string("missing \"") + key + "\"");

  auto read_count = [&](const char* key) -> std::uint64_t {
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      fail_at(text, member_at(key), "malformed_syntax",
              std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
  };
  const std::uint64_t n = read_count("vertices");
  if (n > kMaxVertices)
    fail_at(text, member_at("vertices"), "out_of_range", "more than 2^20 vertices");
  const std::uint64_t token = read_count("token");
  if (token >= n)
    fail_at(text, member_at("token"), "out_of_range",
            "token " + std::to_string(token) + " outside [0, " + std::to_string(n) + ")");

  const char* key = has_edges ? "edges" : "arcs";
  const auto& list = doc.at(key);
  if (!list.is_array())
    fail_at(text, member_at(key), "malformed_syntax", std::string("\"") + key + "\" must be an array");
  auto elem_at = [&](std::size_t i) { return loc.element_offset(key, i); };
  std::vector<Edge> pairs;
  pairs.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      fail_at(text, elem_at(i), "malformed_syntax",
              std::string(key) + "[" + std::to_string(i) + "] must be a pair of integers");
    auto a = e[0].get<std::int64_t>(), b = e[1].get<std::int64_t>();
    if (a < 0 || b < 0 || static_cast<std::uint64_t>(a) >= n ||
        static_cast<std::uint64_t>(b) >= n)
      fail_at(text, elem_at(i), "out_of_range",
              std::string(key) + "[" + std::to_string(i) + "] references a vertex outside [0, " +
                  std::to_string(n) + ")");
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  validate_pairs(text, n, pairs, has_arcs, elem_at);
  if (has_arcs)
    return make_directed_position(DirectedGraph::from_arcs(n, pairs), static_cast<Vertex>(token));
  return make_position(Graph::from_edges(n, pairs), static_cast<Vertex>(token));
}

inline AnyPosition parse_edgelist_graph(std::string_view text) {
  struct Line {
    std::string_view body;
    std::size_t offset;
    long number;
  };
  std::vector<Line> lines;
  {
    std::size_t start = 0;
    long number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view body = text.substr(start, end - start);
      if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
      lines.push_back({body, start, number});
      if (end == text.size()) break;
      start = end + 1;
      ++number;
    }
  }
  auto tokens_of = [](const Line& l) {
    std::vector<std::pair<std::string_view, std::size_t>> out;
    std::size_t i = 0;
    while (i < l.body.size()) {
      while (i < l.body.size() && (l.body[i] == ' ' || l.body[i] == '\t')) ++i;
      std::size_t b = i;
      while (i < l.body.size() && l.body[i] != ' ' && l.body[i] != '\t') ++i;
      if (i > b) out.emplace_back(l.body.substr(b, i - b), l.offset + b);
    }
    return out;
  };
  auto number = [&](std::string_view tok, std::size_t off, const char* what) -> std::uint64_t {
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      fail_at(text, off, "malformed_syntax",
              std::string("expected a non-negative integer for ") + what);
    return value;
  };

  std::size_t li = 0;
  while (li < lines.size() && tokens_of(lines[li]).empty()) ++li;
  if (li == lines.size()) fail_at(text, 0, "malformed_syntax", "empty input");
  auto header = tokens_of(lines[li]);
  if (header.size() != 3 || (header[0].first != "ug" && header[0].first != "gg"))
    fail_at(text, lines[li].offset, "malformed_syntax",
            "header must be `ug <n> <token>` or `gg <n> <token>`");
  const bool directed = header[0].first == "gg";
  const std::uint64_t n = number(header[1].first, header[1].second, "vertex count");
  if (n > kMaxVertices) fail_at(text, header[1].second, "out_of_range", "more than 2^20 vertices");
  const std::uint64_t token = number(header[2].first, header[2].second, "token");
  if (token >= n)
    fail_at(text, header[2].second, "out_of_range",
            "token " + std::to_string(token) + " outside [0, " + std::to_string(n) + ")");

  std::vector<Edge> pairs;
  std::vector<std::size_t> offsets;
  for (++li; li < lines.size(); ++li) {
    auto toks = tokens_of(lines[li]);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      fail_at(text, lines[li].offset, "malformed_syntax", "expected `u v`");
    auto u = number(toks[0].first, toks[0].second, "edge endpoint");
    auto v = number(toks[1].first, toks[1].second, "edge endpoint");
    if (u >= n || v >= n)
      fail_at(text, lines[li].offset, "out_of_range",
              "endpoint outside [0, " + std::to_string(n) + ")");
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    offsets.push_back(lines[li].offset);
  }
  validate_pairs(text, n, pairs, directed, [&](std::size_t i) { return offsets[i]; });
  if (directed)
    return make_directed_position(DirectedGraph::from_arcs(n, pairs), static_cast<Vertex>(token));
  return make_position(Graph::from_edges(n, pairs), static_cast<Vertex>(token));
}

}  // namespace detail

inline GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? GraphFormat::json : GraphFormat::edgelist;
  }
  return GraphFormat::json;
}

inline AnyPosition parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? detail::parse_json_graph(text)
                                     : detail::parse_edgelist_graph(text);
}

inline AnyPosition parse_graph(std::string_view text) {
  return parse_graph(text, detect_format(text));
}

inline Position parse_position(std::string_view text) {
  auto any = parse_graph(text);
  if (auto* p = std::get_if<Position>(&any)) return std::move(*p);
  throw ParseError("wrong_kind", "expected an undirected graph, got arcs");
}

inline DirectedPosition parse_directed_position(std::string_view text) {
  auto any = parse_graph(text);
  if (auto* p = std::get_if<DirectedPosition>(&any)) return std::move(*p);
  throw ParseError("wrong_kind", "expected a directed graph, got edges");
}

namespace detail {
inline std::string pairs_json(const std::vector<Edge>& pairs) {
  std::string out = "[";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += std::to_string(pairs[i].first);
    out += ',';
    out += std::to_string(pairs[i].second);
    out += ']';
  }
  out += ']';
  return out;
}
}  // namespace detail

// Canonical JSON: key order vertices, edges|arcs, token; no whitespace.
inline std::string serialize_graph(const Position& p) {
  return "{\"vertices\":" + std::to_string(p.graph.vertex_count()) +
         ",\"edges\":" + detail::pairs_json(p.graph.edges()) +
         ",\"token\":" + std::to_string(p.token) + "}";
}

inline std::string serialize_graph(const DirectedPosition& p) {
  return "{\"vertices\":" + std::to_string(p.graph.vertex_count()) +
         ",\"arcs\":" + detail::pairs_json(p.graph.arcs()) +
         ",\"token\":" + std::to_string(p.token) + "}";
}

inline std::string serialize_graph(const AnyPosition& p) {
  return std::visit([](const auto& q) { return serialize_graph(q); }, p);
}

inline std::string serialize_edgelist(const Position& p) {
  std::string out = "ug " + std::to_string(p.graph.vertex_count()) + " " +
                    std::to_string(p.token) + "\n";
  for (auto [u, v] : p.graph.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string serialize_edgelist(const DirectedPosition& p) {
  std::string out = "gg " + std::to_string(p.graph.vertex_count()) + " " +
                    std::to_string(p.token) + "\n";
  for (auto [u, v] : p.graph.arcs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace ugeo
