#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ugeo/graph.hpp"
#include "ugeo/matching.hpp"
#include "ugeo/nimber.hpp"

namespace ugeo {

struct Degree3Stats {
  // One strategic determination (winnable + winning move) counts as one call.
  std::uint64_t oracle_calls = 0;
};

// *(3 - x) for a Fuzzy option known to have value * or *2.
inline Nimber three_minus(Nimber x) {
  if (x.value() != 1 && x.value() != 2)
    throw ContractViolation("*(3 - x) applied to " + x.to_string() +
                            "; the option must be * or *2");
  return Nimber(3 - x.value());
}

// Grundy values on graphs of maximum degree 3 using O(n) winnability calls.
// A token with two options is resolved from the outcome classes of both
// options; in the mixed case only the Fuzzy option is followed, and since its
// winning move is already known from the same oracle call, each further level
// costs one call.
class Degree3Solver {
 public:
  Degree3Solver(const Graph& g, VertexMask mask) : g_(g), mask_(std::move(mask)) {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (mask_.removed(v)) continue;
      std::size_t d = live_degree(g_, v, mask_);
      if (d > 3) throw DegreeViolation(v, d, 3);
    }
  }

  Nimber solve(Vertex token) {
    auto opts = neighbors_alive(g_, token, mask_);
    if (opts.size() <= 2) return small(token, opts);
    mask_.remove(token);
    std::vector<Nimber> values;
    for (Vertex u : opts) values.push_back(small(u, neighbors_alive(g_, u, mask_)));
    mask_.restore(token);
    return mex(values);
  }

  const Degree3Stats& stats() const { return stats_; }

 private:
  Determination query(Vertex v) {
    ++stats_.oracle_calls;
    return determine(g_, mask_, v);
  }

  // Value of a token with at most two live options.
  Nimber small(Vertex s, const std::vector<Vertex>& opts) {
    if (opts.empty()) return Nimber(0);
    if (opts.size() == 1) return Nimber(query(s).winnable ? 1 : 0);
    mask_.remove(s);
    Determination d1 = query(opts[0]);
    Determination d2 = query(opts[1]);
    Nimber result;
    if (d1.winnable && d2.winnable) {
      result = Nimber(0);
    } else if (!d1.winnable && !d2.winnable) {
      result = Nimber(1);
    } else {
      const bool first = d1.winnable;
      Vertex fuzzy = first ? opts[0] : opts[1];
      Vertex zero_move = *(first ? d1 : d2).winning_move;
      result = three_minus(fuzzy_value(fuzzy, zero_move));
    }
    mask_.restore(s);
    return result;
  }

  // Value of a Fuzzy token s with at most two options, one of which
  // (zero_move) is a Zero position. Walks the chain of Fuzzy options.
  Nimber fuzzy_value(Vertex s, Vertex zero_move) {
    std::vector<Vertex> removed;
    std::size_t depth = 0;
    while (true) {
      auto opts = neighbors_alive(g_, s, mask_);
      if (opts.size() > 2) throw DegreeViolation(s, opts.size() + 1, 3);
      if (opts.size() < 2) break;  // only the Zero option: value *
      Vertex other = opts[0] == zero_move ? opts[1] : opts[0];
      mask_.remove(s);
      removed.push_back(s);
      Determination d = query(other);
      if (!d.winnable) break;  // options {0, 0}: value *
      s = other;
      zero_move = *d.winning_move;
      ++depth;
    }
    for (Vertex v : removed) mask_.restore(v);
    Nimber value(1);
    for (std::size_t i = 0; i < depth; ++i) value = three_minus(value);
    return value;
  }

  const Graph& g_;
  VertexMask mask_;
  Degree3Stats stats_;
};

inline Nimber grundy_degree3(const Position& p, const VertexMask& mask,
                             Degree3Stats* stats = nullptr) {
  Degree3Solver solver(p.graph, mask);
  Nimber v = solver.solve(p.token);
  if (stats) *stats = solver.stats();
  return v;
}

inline Nimber grundy_degree3(const Position& p, Degree3Stats* stats = nullptr) {
  return grundy_degree3(p, VertexMask(p.graph.vertex_count()), stats);
}

}  // namespace ugeo
