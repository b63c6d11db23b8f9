#pragma once

#include <cstdint>
#include <unordered_map>

#include "ugeo/exact.hpp"
#include "ugeo/graph.hpp"

namespace ugeo {

// Plain negamax for Generalized Geography (token follows out-arcs, departed
// vertex removed). Reference solver for the reduction checks; n <= 64.
class GGSolver {
 public:
  explicit GGSolver(const DirectedGraph& g) : g_(g) {
    if (g.vertex_count() > 64) throw InvalidRange("GGSolver supports at most 64 vertices");
  }

  // True iff the player to move from `token` wins (N-position).
  bool wins(Vertex token, std::uint64_t removed = 0) {
    detail::NarrowKey key{removed, token};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint64_t child = removed | (std::uint64_t{1} << token);
    bool result = false;
    for (Vertex v : g_.out_neighbors(token)) {
      if ((child >> v) & 1U) continue;
      if (!wins(v, child)) {
        result = true;
        break;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const DirectedGraph& g_;
  std::unordered_map<detail::NarrowKey, bool, detail::NarrowKeyHash> memo_;
};

inline bool gg_winnable(const DirectedPosition& p) {
  GGSolver s(p.graph);
  return s.wins(p.token);
}

}  // namespace ugeo
