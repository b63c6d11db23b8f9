#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ugeo/exact.hpp"
#include "ugeo/graph.hpp"
#include "ugeo/matching.hpp"
#include "ugeo/nimber.hpp"

namespace ugeo {

struct BabOptions {
  // Degree threshold separating "moderate" from "high" degree vertices; only
  // used for the runtime-bound report, not for the search itself.
  std::size_t delta = 3;
  std::optional<SolveBudget> budget;
};

struct BabStats {
  std::uint64_t oracle_calls = 0;
  std::uint64_t branched_nodes = 0;  // nodes with >= 3 options, fully expanded
  std::size_t high_degree_vertices = 0;      // D: degree > delta
  std::size_t moderate_degree_vertices = 0;  // degree in (3, delta]
  // D + c*log2(delta) + 3 with c = moderate / log2(n): exponent of the
  // polynomial bound when matching costs O(n^3).
  double bound_exponent = 0.0;
};

// Exact Grundy values on general graphs. Nodes with at most two options are
// resolved with winnability calls (following the Fuzzy option only); nodes
// with more options branch fully under a memo.
class BabSolver {
 public:
  BabSolver(const Graph& g, VertexMask mask, BabOptions options = {})
      : g_(g),
        mask_(std::move(mask)),
        meter_(options.budget.value_or(SolveBudget{~std::uint64_t{0}, ~std::uint64_t{0}})) {
    const std::size_t n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      std::size_t d = g.degree(v);
      if (d > options.delta) ++stats_.high_degree_vertices;
      else if (d > 3) ++stats_.moderate_degree_vertices;
    }
    double logn = n > 1 ? std::log2(static_cast<double>(n)) : 1.0;
    double c = static_cast<double>(stats_.moderate_degree_vertices) / logn;
    stats_.bound_exponent = static_cast<double>(stats_.high_degree_vertices) +
                            c * std::log2(static_cast<double>(std::max<std::size_t>(options.delta, 2))) +
                            3.0;
  }

  Nimber solve(Vertex token) { return value(token); }
  const BabStats& stats() const { return stats_; }

 private:
  Determination query(Vertex v) {
    ++stats_.oracle_calls;
    return determine(g_, mask_, v);
  }

  static Nimber mex_with_zero(Nimber x) { return Nimber(x.value() == 1 ? 2 : 1); }

  Nimber value(Vertex s) {
    auto opts = neighbors_alive(g_, s, mask_);
    if (opts.size() <= 2) return small(s, opts);
    detail::WideKey key{{mask_.words().begin(), mask_.words().end()}, s};
    if (auto it = memo_.find(key); it != memo_.end()) return Nimber(it->second);
    meter_.tick();
    ++stats_.branched_nodes;
    mask_.remove(s);
    std::vector<Nimber> vals;
    for (Vertex u : opts) vals.push_back(value(u));
    mask_.restore(s);
    Nimber m = mex(vals);
    memo_.emplace(std::move(key), m.value());
    return m;
  }

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
      result = mex_with_zero(fuzzy_value(first ? opts[0] : opts[1],
                                         *(first ? d1 : d2).winning_move));
    }
    mask_.restore(s);
    return result;
  }

  // s is Fuzzy and zero_move is one of its Zero options.
  Nimber fuzzy_value(Vertex s, Vertex zero_move) {
    auto opts = neighbors_alive(g_, s, mask_);
    if (opts.size() == 1) return Nimber(1);
    if (opts.size() >= 3) return value(s);
    Vertex other = opts[0] == zero_move ? opts[1] : opts[0];
    mask_.remove(s);
    Determination d = query(other);
    Nimber result = d.winnable ? mex_with_zero(fuzzy_value(other, *d.winning_move)) : Nimber(1);
    mask_.restore(s);
    return result;
  }

  const Graph& g_;
  VertexMask mask_;
  BudgetMeter meter_;
  BabStats stats_;
  std::unordered_map<detail::WideKey, std::uint32_t, detail::WideKeyHash> memo_;
};

inline Nimber grundy_bab(const Position& p, const VertexMask& mask, BabOptions options = {},
                         BabStats* stats = nullptr) {
  BabSolver solver(p.graph, mask, options);
  Nimber v = solver.solve(p.token);
  if (stats) *stats = solver.stats();
  return v;
}

inline Nimber grundy_bab(const Position& p, BabOptions options = {}, BabStats* stats = nullptr) {
  return grundy_bab(p, VertexMask(p.graph.vertex_count()), options, stats);
}

}  // namespace ugeo
