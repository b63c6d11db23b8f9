#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ugeo/graph.hpp"

namespace ugeo {

// G(n, p).
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Random graph with maximum degree at most max_degree: candidate pairs are
// visited in random order and kept while both endpoints have room, each with
// probability keep.
inline Graph random_bounded_degree_graph(std::size_t n, std::size_t max_degree, double keep,
                                         std::mt19937_64& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution coin(keep);
  std::vector<std::size_t> deg(n, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    if (deg[u] >= max_degree || deg[v] >= max_degree || !coin(rng)) continue;
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

// All labeled graphs on n vertices, indexed by an edge bitmask over the
// pairs (u, v), u < v, in lexicographic order. n <= 11.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline std::uint64_t graph_code_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto comp = connected_components(g);
  for (auto c : comp)
    if (c != 0) return false;
  return true;
}

// Every directed graph on n vertices with at most max_arcs arcs (no
// self-loops), calling f(DirectedGraph). Arcs are drawn from the n(n-1)
// ordered pairs.
template <class F>
void for_each_digraph(std::size_t n, std::size_t max_arcs, F&& f) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    f(DirectedGraph::from_arcs(n, chosen));
    if (chosen.size() == max_arcs) return;
    for (std::size_t i = start; i < pairs.size(); ++i) {
      chosen.push_back(pairs[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace ugeo
