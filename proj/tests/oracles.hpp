#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library's solvers beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ugeo/graph.hpp"

namespace oracle {

using ugeo::Graph;
using ugeo::Vertex;
using ugeo::VertexMask;

// Maximum matching size by exhaustive branching on the lowest free vertex.
inline std::size_t brute_matching_size(const Graph& g, std::vector<bool>& blocked) {
  const std::size_t n = g.vertex_count();
  Vertex v = 0;
  while (v < n && blocked[v]) ++v;
  if (v == n) return 0;
  blocked[v] = true;
  std::size_t best = brute_matching_size(g, blocked);
  for (Vertex u : g.neighbors(v)) {
    if (blocked[u]) continue;
    blocked[u] = true;
    best = std::max(best, 1 + brute_matching_size(g, blocked));
    blocked[u] = false;
  }
  blocked[v] = false;
  return best;
}

inline std::size_t brute_matching_size(const Graph& g, const VertexMask& mask) {
  std::vector<bool> blocked(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) blocked[v] = mask.removed(v);
  return brute_matching_size(g, blocked);
}

// Grundy value by plain recursion over every play line, no memo.
inline std::uint32_t brute_grundy(const Graph& g, Vertex token, std::vector<bool>& removed) {
  removed[token] = true;
  std::vector<std::uint32_t> vals;
  for (Vertex v : g.neighbors(token))
    if (!removed[v]) vals.push_back(brute_grundy(g, v, removed));
  removed[token] = false;
  std::uint32_t m = 0;
  while (std::find(vals.begin(), vals.end(), m) != vals.end()) ++m;
  return m;
}

inline std::uint32_t brute_grundy(const Graph& g, Vertex token) {
  std::vector<bool> removed(g.vertex_count(), false);
  return brute_grundy(g, token, removed);
}

inline std::uint32_t brute_grundy(const Graph& g, Vertex token, const VertexMask& mask) {
  std::vector<bool> removed(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) removed[v] = mask.removed(v);
  return brute_grundy(g, token, removed);
}

inline Graph path(std::size_t n) {
  std::vector<ugeo::Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<ugeo::Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<ugeo::Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<ugeo::Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace oracle
