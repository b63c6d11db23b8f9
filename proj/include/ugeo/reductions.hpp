#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ugeo/constructor.hpp"
#include "ugeo/errors.hpp"
#include "ugeo/graph.hpp"

namespace ugeo {

// Vertices of the gadget replacing arc x -> y.
struct ArcGadget {
  Vertex x, a, a0, b, c, c0, f, d, d0, y;
};

struct GadgetMap {
  std::vector<ArcGadget> arcs;    // in sorted arc order
  std::vector<Vertex> singleton;  // v0 per original vertex
};

struct ReducedPosition {
  Position position;
  GadgetMap gadgets;
};

// Generalized Geography -> Undirected Geography. Original vertices keep
// their ids; then one pendant v0 per original vertex; then per arc (sorted)
// the block a, a0, b, c, c0, f, d, d0 with edges x-a, a-a0, a-b, b-c, c-c0,
// b-f, c-d, d-d0, f-d, d-y.
inline ReducedPosition gg_to_ug(const DirectedPosition& d) {
  const std::size_t n = d.graph.vertex_count();
  GraphBuilder gb(n);
  GadgetMap map;
  map.singleton.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    map.singleton[v] = gb.add_vertex();
    gb.add_edge(v, map.singleton[v]);
  }
  for (auto [x, y] : d.graph.arcs()) {
    ArcGadget g{};
    g.x = x;
    g.y = y;
    g.a = gb.add_vertex();
    g.a0 = gb.add_vertex();
    g.b = gb.add_vertex();
    g.c = gb.add_vertex();
    g.c0 = gb.add_vertex();
    g.f = gb.add_vertex();
    g.d = gb.add_vertex();
    g.d0 = gb.add_vertex();
    gb.add_edge(g.x, g.a);
    gb.add_edge(g.a, g.a0);
    gb.add_edge(g.a, g.b);
    gb.add_edge(g.b, g.c);
    gb.add_edge(g.c, g.c0);
    gb.add_edge(g.b, g.f);
    gb.add_edge(g.c, g.d);
    gb.add_edge(g.d, g.d0);
    gb.add_edge(g.f, g.d);
    gb.add_edge(g.d, g.y);
    map.arcs.push_back(g);
  }
  return {make_position(gb.build(), d.token), std::move(map)};
}

// Appends start, start0, start2, start20 (in that order) with edges
// start-start0, start-start2, start2-start20, start2-token; the token moves
// to start.
inline Position add_prelude(const Position& p) {
  GraphBuilder gb;
  gb.add_disjoint(p.graph);
  Vertex start = gb.add_vertex();
  Vertex start0 = gb.add_vertex();
  Vertex start2 = gb.add_vertex();
  Vertex start20 = gb.add_vertex();
  gb.add_edge(start, start0);
  gb.add_edge(start, start2);
  gb.add_edge(start2, start20);
  gb.add_edge(start2, p.token);
  return make_position(gb.build(), start);
}

namespace detail {
// Attaches a fresh copy of the value-*k construction to `hub`.
inline void attach_nimber(GraphBuilder& gb, Vertex hub, std::uint32_t k) {
  auto gadget = build_nimber_position(k);
  Vertex base = gb.add_disjoint(gadget.position.graph);
  gb.add_edge(hub, base + gadget.position.token);
}
}  // namespace detail

// For a position promised to be *(from_k - 1) or *from_k: appends v_i for
// i = from_k+1 .. to_k, each with its own gadgets 0, *, ..., *(i-2) and the
// edge v_i - v_{i-1} (v_{from_k} is the old token). The result is *to_k iff
// the input was *from_k, else *(to_k - 1). Gadgets of v_i follow v_i.
inline Position shift_nimber_chain(const Position& p, std::uint32_t from_k, std::uint32_t to_k) {
  if (from_k < 2 || to_k < from_k)
    throw InvalidRange("shift_nimber_chain needs to_k >= from_k >= 2 (got " +
                       std::to_string(from_k) + " -> " + std::to_string(to_k) + ")");
  if (to_k == from_k) return p;
  GraphBuilder gb;
  gb.add_disjoint(p.graph);
  Vertex prev = p.token;
  for (std::uint32_t i = from_k + 1; i <= to_k; ++i) {
    Vertex v = gb.add_vertex();
    for (std::uint32_t k = 0; k + 2 <= i; ++k) detail::attach_nimber(gb, v, k);
    gb.add_edge(v, prev);
    prev = v;
  }
  return make_position(gb.build(), prev);
}

// For a position promised to be *(k - 1) or *k: a new token v_p with its own
// gadgets 0 .. *(k-1) and *(k+1) .. *(target_p - 1) plus the edge to the old
// token. The result is *target_p iff the input was *k, else *k.
inline Position build_separation_instance(const Position& p, std::uint32_t k, std::uint32_t target_p) {
  if (k < 2 || target_p <= k)
    throw InvalidRange("build_separation_instance needs target_p > k >= 2 (got k=" +
                       std::to_string(k) + ", p=" + std::to_string(target_p) + ")");
  GraphBuilder gb;
  gb.add_disjoint(p.graph);
  Vertex v = gb.add_vertex();
  for (std::uint32_t j = 0; j < target_p; ++j)
    if (j != k) detail::attach_nimber(gb, v, j);
  gb.add_edge(v, p.token);
  return make_position(gb.build(), v);
}

}  // namespace ugeo
