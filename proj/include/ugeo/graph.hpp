#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ugeo/errors.hpp"

namespace ugeo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 20;

// Removed-vertex set of a residual graph G_S.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool removed(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  bool alive(Vertex v) const { return !removed(v); }
  void remove(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void restore(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::vector<Vertex> removed_list() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size_; ++v)
      if (removed(v)) out.push_back(v);
    return out;
  }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexMask&, const VertexMask&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph on 0..n-1, stored as sorted CSR adjacency.
// Immutable after construction.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Validates range, self-loops and duplicates; [u,v] and [v,u] are the same
  // edge. Throws InvalidGraph with kind out_of_range / self_loop /
  // duplicate_edge; the message names the offending edge index.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > kMaxVertices)
      throw InvalidGraph("too_large", "vertex count exceeds 2^20");
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u >= n || v >= n)
        throw InvalidGraph("out_of_range", "edge " + std::to_string(i) +
                                               " has a vertex outside [0, " +
                                               std::to_string(n) + ")");
      if (u == v)
        throw InvalidGraph("self_loop",
                           "edge " + std::to_string(i) + " is a self-loop");
      norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::vector<std::size_t> order(norm.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return norm[a] < norm[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (norm[order[i]] == norm[order[i - 1]])
        throw InvalidGraph("duplicate_edge",
                           "edge " + std::to_string(order[i]) + " duplicates edge " +
                               std::to_string(order[i - 1]));
    return build_unchecked(n, norm);
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
    return d;
  }
  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // O(V + E) check of sortedness, simplicity and symmetry.
  bool check_invariants() const {
    const std::size_t n = vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      auto nb = neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] >= n || nb[i] == u) return false;
        if (i > 0 && nb[i - 1] >= nb[i]) return false;
        if (!has_edge(nb[i], u)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static Graph build_unchecked(std::size_t n, const std::vector<Edge>& edges) {
    Graph g;
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.targets_.assign(g.offsets_[n], 0);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
      g.targets_[fill[u]++] = v;
      g.targets_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v)
      std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
    return g;
  }

  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> targets_;
};

// Incremental construction for generators; build() validates.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t n) : n_(n) {}

  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

  // Copies g in as a disjoint block; returns the id offset of its vertex 0.
  Vertex add_disjoint(const Graph& g) {
    const auto base = static_cast<Vertex>(n_);
    n_ += g.vertex_count();
    for (auto [u, v] : g.edges()) edges_.emplace_back(base + u, base + v);
    return base;
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  Graph build() const { return Graph::from_edges(n_, edges_); }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct Position {
  Graph graph;
  Vertex token = 0;

  friend bool operator==(const Position&, const Position&) = default;
};

inline Position make_position(Graph g, Vertex token) {
  if (token >= g.vertex_count())
    throw InvalidGraph("out_of_range", "token " + std::to_string(token) +
                                           " outside [0, " +
                                           std::to_string(g.vertex_count()) + ")");
  return Position{std::move(g), token};
}

// Directed graph with sorted out-adjacency. Antiparallel arcs are allowed;
// self-loops and repeated arcs are not.
class DirectedGraph {
 public:
  DirectedGraph() : offsets_(1, 0) {}

  static DirectedGraph from_arcs(std::size_t n, std::span<const Edge> arcs) {
    if (n > kMaxVertices)
      throw InvalidGraph("too_large", "vertex count exceeds 2^20");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      auto [u, v] = arcs[i];
      if (u >= n || v >= n)
        throw InvalidGraph("out_of_range", "arc " + std::to_string(i) +
                                               " has a vertex outside [0, " +
                                               std::to_string(n) + ")");
      if (u == v)
        throw InvalidGraph("self_loop", "arc " + std::to_string(i) + " is a self-loop");
    }
    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (arcs[order[i]] == arcs[order[i - 1]])
        throw InvalidGraph("duplicate_edge", "arc " + std::to_string(order[i]) +
                                                 " duplicates arc " +
                                                 std::to_string(order[i - 1]));
    DirectedGraph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : arcs) ++g.offsets_[u + 1];
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.heads_.assign(arcs.size(), 0);
    std::vector<std::uint32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : arcs) g.heads_[fill[u]++] = v;
    for (std::size_t v = 0; v < n; ++v)
      std::sort(g.heads_.begin() + g.offsets_[v], g.heads_.begin() + g.offsets_[v + 1]);
    return g;
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t arc_count() const { return heads_.size(); }
  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {heads_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Arcs sorted by (tail, head).
  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    out.reserve(arc_count());
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v : out_neighbors(u)) out.emplace_back(u, v);
    return out;
  }
  // In-degree plus out-degree per vertex.
  std::vector<std::size_t> total_degrees() const {
    std::vector<std::size_t> d(vertex_count(), 0);
    for (auto [u, v] : arcs()) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> heads_;
};

struct DirectedPosition {
  DirectedGraph graph;
  Vertex token = 0;

  friend bool operator==(const DirectedPosition&, const DirectedPosition&) = default;
};

inline DirectedPosition make_directed_position(DirectedGraph g, Vertex token) {
  if (token >= g.vertex_count())
    throw InvalidGraph("out_of_range", "token " + std::to_string(token) +
                                           " outside [0, " +
                                           std::to_string(g.vertex_count()) + ")");
  return DirectedPosition{std::move(g), token};
}

// Neighbors of `token` that are not removed, ascending.
inline std::vector<Vertex> neighbors_alive(const Graph& g, Vertex token,
                                           const VertexMask& mask) {
  std::vector<Vertex> out;
  for (Vertex v : g.neighbors(token))
    if (mask.alive(v)) out.push_back(v);
  return out;
}

inline std::vector<Vertex> neighbors_alive(const Position& p, const VertexMask& mask) {
  return neighbors_alive(p.graph, p.token, mask);
}

inline std::size_t live_degree(const Graph& g, Vertex v, const VertexMask& mask) {
  std::size_t d = 0;
  for (Vertex u : g.neighbors(v)) d += mask.alive(u) ? 1 : 0;
  return d;
}

// Side (0/1) per vertex of a proper 2-coloring, or nullopt if an odd cycle
// exists. Each component's smallest vertex gets side 0.
inline std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> side(n, 2);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == 2) {
          side[v] = static_cast<std::uint8_t>(1 - side[u]);
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

// Component id per vertex (ids assigned in order of smallest member).
inline std::vector<std::uint32_t> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n, kUnset);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

// Underlying simple undirected graph of a directed graph (antiparallel arcs
// merge into one edge).
inline Graph underlying_graph(const DirectedGraph& d) {
  std::vector<Edge> edges;
  for (auto [u, v] : d.arcs()) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(d.vertex_count(), edges);
}

// Disjoint union; vertices of b are shifted by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder gb;
  gb.add_disjoint(a);
  gb.add_disjoint(b);
  return gb.build();
}

}  // namespace ugeo
