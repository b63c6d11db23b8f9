#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ugeo/errors.hpp"
#include "ugeo/graph.hpp"
#include "ugeo/reductions.hpp"

namespace ugeo {

struct Card {
  std::int64_t color = 0;
  std::int64_t rank = 0;
  friend auto operator<=>(const Card&, const Card&) = default;
};

// A card may be played on `top` iff it shares color or rank.
inline bool cards_match(const Card& a, const Card& b) { return a.color == b.color || a.rank == b.rank; }

// Swap Uno position. hands[to_move] belongs to the player about to move.
// top == nullopt is the free opening (any card may be played first).
struct SwapUnoState {
  std::array<std::vector<Card>, 2> hands;
  std::optional<Card> top;
  bool swap_used = false;
  int to_move = 0;
};

// Labels of the modified gadget graph H: every vertex gets (a, b) and a
// partition side; across the partition, adjacency holds iff a or b agree.
struct UnoLabeling {
  Position graph;  // H, with the token of the input position
  std::vector<std::int64_t> a, b;
  std::vector<std::uint8_t> side;
};

// Direct O(V^2) scan of the labeling invariant.
inline bool check_uno_labeling(const UnoLabeling& l) {
  const Graph& g = l.graph.graph;
  const std::size_t n = g.vertex_count();
  if (l.a.size() != n || l.b.size() != n || l.side.size() != n) return false;
  for (auto [u, v] : g.edges())
    if (l.side[u] == l.side[v]) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (l.side[u] == l.side[v]) continue;
      bool labels_agree = l.a[u] == l.a[v] || l.b[u] == l.b[v];
      if (labels_agree != g.has_edge(u, v)) return false;
    }
  return true;
}

namespace detail {

// Edge set gg_to_ug would emit for this gadget map, sorted u < v.
inline std::vector<Edge> expected_reduction_edges(const GadgetMap& gmap) {
  std::vector<Edge> out;
  auto add = [&](Vertex u, Vertex v) { out.emplace_back(std::min(u, v), std::max(u, v)); };
  for (Vertex v = 0; v < gmap.singleton.size(); ++v) add(v, gmap.singleton[v]);
  for (const auto& g : gmap.arcs) {
    add(g.x, g.a);
    add(g.a, g.a0);
    add(g.a, g.b);
    add(g.b, g.c);
    add(g.c, g.c0);
    add(g.b, g.f);
    add(g.c, g.d);
    add(g.d, g.d0);
    add(g.f, g.d);
    add(g.d, g.y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Labels the reduced graph, after subdividing b-f and f-d in every gadget,
// so that it becomes an Uno playability graph.
//
// A labeling is an edge 2-coloring (a-edges, b-edges) whose monochromatic
// components are complete bipartite; H has girth 6, so they must be stars.
// Walking a gadget from either end forces one of its endpoints x, y to be a
// leaf of its color class at that gadget, and an original vertex can be such
// a leaf for at most one gadget. So a labeling exists iff gadgets can be
// assigned distinct endpoints, i.e. iff no component of the directed input
// has more arcs than vertices; otherwise labeling_conflict is raised.
inline UnoLabeling label_for_uno(const Position& p, const GadgetMap& gmap) {
  const Graph& g = p.graph;
  const std::size_t n0 = gmap.singleton.size();
  if (g.vertex_count() != 2 * n0 + 8 * gmap.arcs.size() ||
      g.edges() != detail::expected_reduction_edges(gmap))
    throw LabelingConflict("graph is not the gg_to_ug image described by the gadget map");
  if (!bipartition(g)) throw NotBipartite("reduced graph has an odd cycle");

  // H: subdivide b-f and f-d once each.
  const std::size_t m = gmap.arcs.size();
  GraphBuilder hb(g.vertex_count());
  std::vector<Vertex> bf(m), fd(m);
  for (std::size_t i = 0; i < m; ++i) {
    bf[i] = hb.add_vertex();
    fd[i] = hb.add_vertex();
  }
  {
    std::set<Edge> cut;
    for (const auto& ag : gmap.arcs) {
      cut.insert({std::min(ag.b, ag.f), std::max(ag.b, ag.f)});
      cut.insert({std::min(ag.f, ag.d), std::max(ag.f, ag.d)});
    }
    for (auto e : g.edges())
      if (!cut.count(e)) hb.add_edge(e.first, e.second);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& ag = gmap.arcs[i];
      hb.add_edge(ag.b, bf[i]);
      hb.add_edge(bf[i], ag.f);
      hb.add_edge(ag.f, fd[i]);
      hb.add_edge(fd[i], ag.d);
    }
  }
  Graph h = hb.build();
  const std::size_t hn = h.vertex_count();

  // Charge assignment: gadget i -> one of its endpoints, endpoints distinct.
  std::vector<std::vector<std::size_t>> at(n0);
  for (std::size_t i = 0; i < m; ++i) {
    at[gmap.arcs[i].x].push_back(i);
    if (gmap.arcs[i].y != gmap.arcs[i].x) at[gmap.arcs[i].y].push_back(i);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n0, kNone);  // gadget charging each vertex
  std::vector<Vertex> charged(m, kNoVertex);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<bool> seen(n0, false);
    auto try_assign = [&](auto&& self, std::size_t gi) -> bool {
      for (Vertex v : {gmap.arcs[gi].x, gmap.arcs[gi].y}) {
        if (seen[v]) continue;
        seen[v] = true;
        if (owner[v] == kNone || self(self, owner[v])) {
          owner[v] = gi;
          charged[gi] = v;
          return true;
        }
      }
      return false;
    };
    if (!try_assign(try_assign, i))
      throw LabelingConflict("a component of the directed input has more arcs than vertices; "
                             "no Uno labeling of the gadget graph exists");
  }

  // Gadget colors: the gadget charging v must differ from every other
  // gadget at v.
  std::vector<std::vector<std::size_t>> conflict(m);
  for (Vertex v = 0; v < n0; ++v) {
    if (owner[v] == kNone) continue;
    for (std::size_t e : at[v])
      if (e != owner[v]) {
        conflict[owner[v]].push_back(e);
        conflict[e].push_back(owner[v]);
      }
  }
  std::vector<int> gcolor(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    if (gcolor[s] != -1) continue;
    gcolor[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t e = stack.back();
      stack.pop_back();
      for (std::size_t f : conflict[e]) {
        if (gcolor[f] == -1) {
          gcolor[f] = 1 - gcolor[e];
          stack.push_back(f);
        } else if (gcolor[f] == gcolor[e]) {
          throw LabelingConflict("gadget color constraints are unsatisfiable");
        }
      }
    }
  }

  // Edge colors of H.
  std::vector<std::vector<std::pair<Vertex, int>>> colored(hn);
  auto color_edge = [&](Vertex u, Vertex v, int c) {
    colored[u].emplace_back(v, c);
    colored[v].emplace_back(u, c);
  };
  for (Vertex v = 0; v < n0; ++v) {
    int c = owner[v] == kNone ? 0 : 1 - gcolor[owner[v]];
    color_edge(v, gmap.singleton[v], c);
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& ag = gmap.arcs[i];
    const int c = gcolor[i], o = 1 - c;
    color_edge(ag.x, ag.a, c);
    color_edge(ag.d, ag.y, c);
    if (charged[i] == ag.y) {
      color_edge(ag.a, ag.a0, o);
      color_edge(ag.a, ag.b, o);
      color_edge(ag.b, ag.c, c);
      color_edge(ag.b, bf[i], c);
      color_edge(ag.c, ag.c0, o);
      color_edge(ag.c, ag.d, o);
      color_edge(ag.d, fd[i], c);
      color_edge(ag.d, ag.d0, c);
      color_edge(bf[i], ag.f, o);
      color_edge(ag.f, fd[i], o);
    } else {
      color_edge(ag.a, ag.a0, c);
      color_edge(ag.a, ag.b, o);
      color_edge(ag.b, ag.c, c);
      color_edge(ag.b, bf[i], o);
      color_edge(ag.c, ag.c0, c);
      color_edge(ag.c, ag.d, o);
      color_edge(ag.d, fd[i], o);
      color_edge(ag.d, ag.d0, o);
      color_edge(bf[i], ag.f, c);
      color_edge(ag.f, fd[i], c);
    }
  }

  // Labels are component ids of each color class; isolated vertices of a
  // class get fresh ids.
  UnoLabeling out;
  out.graph = make_position(std::move(h), p.token);
  out.side = *bipartition(out.graph.graph);
  std::array<std::vector<std::int64_t>, 2> label{std::vector<std::int64_t>(hn, -1),
                                                 std::vector<std::int64_t>(hn, -1)};
  for (int c = 0; c < 2; ++c) {
    std::int64_t next = 0;
    for (Vertex s = 0; s < hn; ++s) {
      if (label[c][s] != -1) continue;
      label[c][s] = next;
      std::vector<Vertex> stack{s};
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (auto [v, col] : colored[u])
          if (col == c && label[c][v] == -1) {
            label[c][v] = next;
            stack.push_back(v);
          }
      }
      ++next;
    }
  }
  out.a = std::move(label[0]);
  out.b = std::move(label[1]);
  if (!check_uno_labeling(out))
    throw LabelingConflict("constructed labeling violates the adjacency invariant");
  return out;
}

// Cards from a labeling: color = a, rank = b. The token's card is the top of
// the pile; the player holding the other side moves first.
inline SwapUnoState uno_from_labeling(const UnoLabeling& l) {
  SwapUnoState s;
  const Vertex token = l.graph.token;
  for (Vertex v = 0; v < l.graph.graph.vertex_count(); ++v) {
    Card card{l.a[v], l.b[v]};
    if (v == token) {
      s.top = card;
      continue;
    }
    s.hands[l.side[v]].push_back(card);
  }
  s.to_move = 1 - l.side[token];
  return s;
}

// Playability graph of a Swap Uno position as a UG position: vertex 0 is the
// top card (or, for a free opening, a start vertex adjacent to every card of
// the mover), then the mover's cards, then the opponent's cards. Cards of
// different hands are adjacent iff they match.
inline Position uno_playability_position(const SwapUnoState& s) {
  const auto& mine = s.hands[s.to_move];
  const auto& theirs = s.hands[1 - s.to_move];
  GraphBuilder gb(1 + mine.size() + theirs.size());
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (!s.top || cards_match(*s.top, mine[i])) gb.add_edge(0, static_cast<Vertex>(1 + i));
    for (std::size_t j = 0; j < theirs.size(); ++j)
      if (cards_match(mine[i], theirs[j]))
        gb.add_edge(static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + mine.size() + j));
  }
  return make_position(gb.build(), 0);
}

}  // namespace ugeo
