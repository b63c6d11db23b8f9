#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ugeo/graph.hpp"
#include "ugeo/nimber.hpp"

namespace ugeo {

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct NarrowKey {
  std::uint64_t removed;
  Vertex token;
  bool operator==(const NarrowKey&) const = default;
};
struct NarrowKeyHash {
  std::size_t operator()(const NarrowKey& k) const {
    return mix64(k.removed ^ (std::uint64_t{k.token} << 58) ^ k.token);
  }
};

struct WideKey {
  std::vector<std::uint64_t> removed;
  Vertex token;
  bool operator==(const WideKey&) const = default;
};
struct WideKeyHash {
  std::size_t operator()(const WideKey& k) const {
    std::uint64_t h = mix64(k.token);
    for (auto w : k.removed) h = mix64(h ^ w);
    return h;
  }
};

}  // namespace detail

// Memoized depth-first Grundy oracle. The memo key is the exact
// (removed-set, token) pair; the memo persists across solve() calls on the
// same graph, and so does the state budget.
class ExactSolver {
 public:
  explicit ExactSolver(const Graph& g, SolveBudget budget = {})
      : g_(g), meter_(budget), narrow_(g.vertex_count() <= 64) {}

  Nimber solve(Vertex token, const VertexMask& mask) {
    if (narrow_) {
      std::uint64_t removed = mask.words().empty() ? 0 : mask.words()[0];
      return Nimber(solve_narrow(removed, token));
    }
    std::vector<std::uint64_t> words(mask.words().begin(), mask.words().end());
    return Nimber(solve_wide(words, token));
  }

  Nimber solve(Vertex token) { return solve(token, VertexMask(g_.vertex_count())); }

  std::uint64_t states_visited() const { return meter_.states(); }

 private:
  std::uint32_t solve_narrow(std::uint64_t removed, Vertex token) {
    detail::NarrowKey key{removed, token};
    if (auto it = narrow_memo_.find(key); it != narrow_memo_.end()) return it->second;
    meter_.tick();
    const std::uint64_t child_removed = removed | (std::uint64_t{1} << token);
    std::uint64_t seen = 0;
    std::vector<bool> seen_high;
    for (Vertex v : g_.neighbors(token)) {
      if ((removed >> v) & 1U) continue;
      std::uint32_t c = solve_narrow(child_removed, v);
      if (c < 64) {
        seen |= std::uint64_t{1} << c;
      } else {
        if (seen_high.size() <= c) seen_high.resize(c + 1, false);
        seen_high[c] = true;
      }
    }
    std::uint32_t m = static_cast<std::uint32_t>(std::countr_one(seen));
    if (m == 64)
      while (m < seen_high.size() && seen_high[m]) ++m;
    narrow_memo_.emplace(key, m);
    return m;
  }

  std::uint32_t solve_wide(std::vector<std::uint64_t>& removed, Vertex token) {
    detail::WideKey key{removed, token};
    if (auto it = wide_memo_.find(key); it != wide_memo_.end()) return it->second;
    meter_.tick();
    auto is_removed = [&](Vertex v) { return (removed[v >> 6] >> (v & 63)) & 1U; };
    removed[token >> 6] |= std::uint64_t{1} << (token & 63);
    std::vector<Nimber> children;
    for (Vertex v : g_.neighbors(token))
      if (!is_removed(v)) children.emplace_back(solve_wide(removed, v));
    removed[token >> 6] &= ~(std::uint64_t{1} << (token & 63));
    std::uint32_t m = mex(children).value();
    wide_memo_.emplace(std::move(key), m);
    return m;
  }

  const Graph& g_;
  BudgetMeter meter_;
  bool narrow_;
  std::unordered_map<detail::NarrowKey, std::uint32_t, detail::NarrowKeyHash> narrow_memo_;
  std::unordered_map<detail::WideKey, std::uint32_t, detail::WideKeyHash> wide_memo_;
};

inline Nimber exact_grundy(const Position& p, const VertexMask& mask, SolveBudget budget = {}) {
  ExactSolver solver(p.graph, budget);
  return solver.solve(p.token, mask);
}

inline Nimber exact_grundy(const Position& p, SolveBudget budget = {}) {
  return exact_grundy(p, VertexMask(p.graph.vertex_count()), budget);
}

}  // namespace ugeo
