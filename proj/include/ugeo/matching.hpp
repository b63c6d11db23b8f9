#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ugeo/graph.hpp"

namespace ugeo {

struct Matching {
  // mate[v] == kNoVertex when v is exposed.
  std::vector<Vertex> mate;

  std::size_t size() const {
    std::size_t pairs = 0;
    for (Vertex v = 0; v < mate.size(); ++v)
      if (mate[v] != kNoVertex && v < mate[v]) ++pairs;
    return pairs;
  }
  std::optional<Vertex> partner(Vertex v) const {
    if (mate[v] == kNoVertex) return std::nullopt;
    return mate[v];
  }
};

// Mutual, edge-backed, live-only. Does not check maximality.
inline bool is_valid_matching(const Graph& g, const VertexMask& mask, const Matching& m) {
  if (m.mate.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < m.mate.size(); ++v) {
    Vertex u = m.mate[v];
    if (u == kNoVertex) continue;
    if (u >= g.vertex_count() || m.mate[u] != v) return false;
    if (mask.removed(u) || mask.removed(v) || !g.has_edge(u, v)) return false;
  }
  return true;
}

// Edmonds' blossom algorithm on the live subgraph (one BFS per exposed root,
// blossoms contracted through a base[] array). O(V^3) overall.
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, VertexMask mask)
      : g_(g),
        mask_(std::move(mask)),
        n_(g.vertex_count()),
        match_(n_, kNoVertex),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        lca_mark_(n_) {
    queue_.reserve(n_);
  }

  // Greedy start, then one augmenting search per exposed vertex.
  void run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mask_.removed(v) || match_[v] != kNoVertex) continue;
      for (Vertex u : g_.neighbors(v))
        if (mask_.alive(u) && match_[u] == kNoVertex) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
    }
    for (Vertex v = 0; v < n_; ++v)
      if (mask_.alive(v) && match_[v] == kNoVertex) augment_from(v);
  }

  // Searches for an augmenting path starting at the exposed vertex root and
  // applies it. Returns whether one was found. If one exists, one is found.
  bool augment_from(Vertex root) {
    Vertex end = find_path(root);
    if (end == kNoVertex) return false;
    Vertex v = end;
    while (v != kNoVertex) {
      Vertex pv = parent_[v];
      Vertex ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
    return true;
  }

  // Removes v from the live graph, exposing its partner. Returns the partner.
  Vertex remove_vertex(Vertex v) {
    Vertex u = match_[v];
    if (u != kNoVertex) match_[u] = kNoVertex;
    match_[v] = kNoVertex;
    mask_.remove(v);
    return u;
  }

  Matching matching() const { return Matching{match_}; }
  Vertex mate(Vertex v) const { return match_[v]; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    ++lca_stamp_;
    while (true) {
      a = base_[a];
      lca_mark_[a] = lca_stamp_;
      if (match_[a] == kNoVertex) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b] == lca_stamp_) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNoVertex);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    queue_.clear();
    queue_.push_back(root);
    for (std::size_t qh = 0; qh < queue_.size(); ++qh) {
      Vertex v = queue_[qh];
      for (Vertex to : g_.neighbors(v)) {
        if (mask_.removed(to)) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNoVertex && parent_[match_[to]] != kNoVertex)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i)
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue_.push_back(i);
              }
            }
        } else if (parent_[to] == kNoVertex) {
          parent_[to] = v;
          if (match_[to] == kNoVertex) return to;
          Vertex next = match_[to];
          used_[next] = 1;
          queue_.push_back(next);
        }
      }
    }
    return kNoVertex;
  }

  const Graph& g_;
  VertexMask mask_;
  Vertex n_;
  std::vector<Vertex> match_, parent_, base_;
  std::vector<std::uint8_t> used_, blossom_;
  std::vector<std::uint64_t> lca_mark_;
  std::uint64_t lca_stamp_ = 0;
  std::vector<Vertex> queue_;
};

inline Matching maximum_matching(const Graph& g, const VertexMask& mask) {
  BlossomMatcher m(g, mask);
  m.run();
  return m.matching();
}

inline Matching maximum_matching(const Graph& g) {
  return maximum_matching(g, VertexMask(g.vertex_count()));
}

// Winnability plus a winning move, from a single matching computation.
struct Determination {
  bool winnable = false;
  std::optional<Vertex> winning_move;
};

// The token is winnable iff it is covered by every maximum matching of the
// live graph. With M maximum and token s matched to u, M - {su} is maximum in
// G - s unless an augmenting path exists; any such path must end at u, so a
// single search from u decides it. When none exists, u is a winning move.
inline Determination determine(const Graph& g, const VertexMask& mask, Vertex token) {
  BlossomMatcher m(g, mask);
  m.run();
  if (m.mate(token) == kNoVertex) return {false, std::nullopt};
  Vertex u = m.remove_vertex(token);
  if (m.augment_from(u)) return {false, std::nullopt};
  return {true, u};
}

inline bool is_winnable(const Graph& g, const VertexMask& mask, Vertex token) {
  return determine(g, mask, token).winnable;
}

inline bool is_winnable(const Position& p, const VertexMask& mask) {
  return is_winnable(p.graph, mask, p.token);
}

inline bool is_winnable(const Position& p) {
  return is_winnable(p, VertexMask(p.graph.vertex_count()));
}

inline std::optional<Vertex> winning_move(const Position& p, const VertexMask& mask) {
  return determine(p.graph, mask, p.token).winning_move;
}

inline std::optional<Vertex> winning_move(const Position& p) {
  return winning_move(p, VertexMask(p.graph.vertex_count()));
}

}  // namespace ugeo
