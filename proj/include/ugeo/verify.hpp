#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ugeo/constructor.hpp"
#include "ugeo/degree3.hpp"
#include "ugeo/exact.hpp"
#include "ugeo/generators.hpp"
#include "ugeo/gg_solver.hpp"
#include "ugeo/lemmas.hpp"
#include "ugeo/matching.hpp"
#include "ugeo/nimber.hpp"
#include "ugeo/reductions.hpp"
#include "ugeo/uno.hpp"
#include "ugeo/variants.hpp"

// Property checks behind `ugeo verify` and the acceptance binary. Each
// check compares a library result against an independent route (the exact
// game-tree solver, direct search of the directed game, or the variant
// engine) and reports counts, not just a verdict.

namespace ugeo::verify {

enum class Scale { quick, full };

struct Report {
  explicit Report(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no limit
  std::string detail;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    passed = false;
    if (first_failure.empty()) first_failure = describe();
  }
};

namespace detail {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void finish(Report& r, const Timer& t) {
  r.seconds = t.seconds();
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
    r.passed = false;
    if (r.first_failure.empty()) r.first_failure = "runtime limit exceeded";
  }
}

inline std::string describe(const Graph& g, Vertex token) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " token=" << token << " edges=";
  for (auto [u, v] : g.edges()) out << u << '-' << v << ' ';
  return out.str();
}

inline std::string describe(const DirectedGraph& d, Vertex token) {
  std::ostringstream out;
  out << "n=" << d.vertex_count() << " token=" << token << " arcs=";
  for (auto [u, v] : d.arcs()) out << u << "->" << v << ' ';
  return out.str();
}

// Checks is_winnable and winning_move against exact values of the position
// and of the proposed child.
inline void check_winnability(Report& r, const Graph& g, Vertex token) {
  ExactSolver exact(g);
  VertexMask none(g.vertex_count());
  Determination d = determine(g, none, token);
  const bool truth = !exact.solve(token).is_zero();
  r.expect(d.winnable == truth, [&] { return "winnability mismatch: " + describe(g, token); });
  if (d.winning_move) {
    VertexMask after = none;
    after.remove(token);
    r.expect(g.has_edge(token, *d.winning_move) && exact.solve(*d.winning_move, after).is_zero(),
             [&] { return "winning move not to a zero child: " + describe(g, token); });
  }
}

}  // namespace detail

// mex and nim-sum laws on small values.
inline Report algebra(Scale = Scale::full) {
  detail::Timer t;
  Report r{"algebra"};
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 64; ++b) {
      Nimber x(a), y(b);
      r.expect((x ^ y) == (y ^ x), [&] { return "xor not commutative"; });
      r.expect(((x ^ y) ^ y) == x, [&] { return "xor not self-inverse"; });
      r.expect((x ^ Nimber(0)) == x, [&] { return "0 not the identity"; });
      for (std::uint32_t c = 0; c < 8; ++c)
        r.expect(((x ^ y) ^ Nimber(c)) == (x ^ (y ^ Nimber(c))), [&] { return "xor not associative"; });
    }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Nimber> vals;
    for (int k = rng() % 6; k > 0; --k) vals.emplace_back(static_cast<std::uint32_t>(rng() % 6));
    Nimber m = mex(vals);
    bool absent = std::find(vals.begin(), vals.end(), m) == vals.end();
    bool below_present = true;
    for (std::uint32_t v = 0; v < m.value(); ++v)
      below_present = below_present && std::find(vals.begin(), vals.end(), Nimber(v)) != vals.end();
    r.expect(absent && below_present && m.value() <= vals.size(), [&] { return "mex definition violated"; });
  }
  r.expect(mex({}) == Nimber(0) && mex({Nimber(0), Nimber(2)}) == Nimber(1) &&
               mex({Nimber(0), Nimber(1), Nimber(2)}) == Nimber(3),
           [] { return "mex examples"; });
  detail::finish(r, t);
  return r;
}

// Criterion 1: matching winnability against exact Grundy values.
inline Report matching(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"matching"};
  r.limit_seconds = 300;
  const std::size_t max_n = scale == Scale::full ? 6 : 5;
  const int random_trials = scale == Scale::full ? 10000 : 1000;
  std::uint64_t exhaustive = 0;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::uint64_t code = 0; code < graph_code_count(n); ++code) {
      Graph g = graph_from_code(n, code);
      if (!is_connected(g)) continue;
      for (Vertex s = 0; s < n; ++s) detail::check_winnability(r, g, s);
      ++exhaustive;
    }
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < random_trials; ++trial) {
    std::size_t n = 1 + rng() % 12;
    double p = std::uniform_real_distribution<double>(0.1, 0.8)(rng);
    Graph g = random_graph(n, p, rng);
    detail::check_winnability(r, g, static_cast<Vertex>(rng() % n));
  }
  r.detail = std::to_string(exhaustive) + " connected graphs n<=" + std::to_string(max_n) +
             " (all tokens) + " + std::to_string(random_trials) + " random n<=12";
  detail::finish(r, t);
  return r;
}

// Criterion 2: degree-3 algorithm against exact values, with the 3n bound on
// winnability calls.
inline Report degree3(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"degree3"};
  r.limit_seconds = 300;
  const int trials = scale == Scale::full ? 2000 : 300;
  std::mt19937_64 rng(202);
  std::uint64_t max_calls = 0;
  for (int trial = 0; trial < trials; ++trial) {
    std::size_t n = 1 + rng() % 14;
    double keep = std::uniform_real_distribution<double>(0.4, 1.0)(rng);
    Graph g = random_bounded_degree_graph(n, 3, keep, rng);
    Position p = make_position(std::move(g), static_cast<Vertex>(rng() % n));
    Degree3Stats stats;
    Nimber fast = grundy_degree3(p, &stats);
    Nimber truth = exact_grundy(p);
    max_calls = std::max<std::uint64_t>(max_calls, stats.oracle_calls);
    r.expect(fast == truth, [&] { return "value mismatch: " + detail::describe(p.graph, p.token); });
    r.expect(stats.oracle_calls <= 3 * n,
             [&] { return "more than 3n winnability calls: " + detail::describe(p.graph, p.token); });
  }
  r.detail = std::to_string(trials) + " random graphs with max degree 3, n<=14; most oracle calls " +
             std::to_string(max_calls);
  detail::finish(r, t);
  return r;
}

// Vertex and edge counts of build_nimber_position(n), derived once from the
// construction and frozen.
inline const std::map<std::uint32_t, std::pair<std::size_t, std::size_t>>& frozen_census() {
  static const std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> census{
      {4, {16, 15}},   {5, {46, 47}},   {6, {86, 92}},   {7, {136, 150}},
      {8, {196, 221}}, {9, {266, 305}}, {10, {346, 402}}};
  return census;
}

// Criterion 3: constructor values, lemma suites and quadratic growth.
inline Report constructor(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"constructor"};
  r.limit_seconds = 600;
  for (std::uint32_t n = 0; n <= 5; ++n) {
    auto c = build_nimber_position(n);
    r.expect(exact_grundy(c.position).value() == n, [&] { return "construction for *" + std::to_string(n); });
  }
  std::uint64_t lemma_states = 0;
  for (std::uint32_t n : {4u, 5u}) {
    auto c = build_nimber_position(n);
    for (Lemma l : {Lemma::grounded, Lemma::r_to_n, Lemma::skip_star2, Lemma::skip_star, Lemma::not_1_or_2,
                    Lemma::parity}) {
      LemmaReport rep = verify_lemma(c, l);
      lemma_states += rep.checks.size();
      r.expect(rep.passed(), [&] { return std::string("lemma ") + lemma_name(l) + " at n=" + std::to_string(n); });
    }
  }
  for (const auto& [n, counts] : frozen_census()) {
    auto c = build_nimber_position(n);
    r.expect(c.position.graph.vertex_count() == counts.first && c.position.graph.edge_count() == counts.second,
             [&] { return "census differs at n=" + std::to_string(n); });
  }
  // Quadratic growth: constant second differences from n=4 on.
  const std::uint32_t top = scale == Scale::full ? 40 : 16;
  std::vector<long> v, e;
  for (std::uint32_t n = 4; n <= top; ++n) {
    auto c = build_nimber_position(n);
    v.push_back(static_cast<long>(c.position.graph.vertex_count()));
    e.push_back(static_cast<long>(c.position.graph.edge_count()));
  }
  for (std::size_t i = 2; i < v.size(); ++i)
    r.expect(v[i] - 2 * v[i - 1] + v[i - 2] == 10 && e[i] - 2 * e[i - 1] + e[i - 2] == 13,
             [&] { return "census not quadratic at n=" + std::to_string(4 + i); });
  r.detail = "values *0..*5, six lemmas at n=4,5 (" + std::to_string(lemma_states) +
             " states), census n=4..10 frozen, quadratic to n=" + std::to_string(top);
  detail::finish(r, t);
  return r;
}

// Every directed position with at most max_n vertices and max_arcs arcs.
template <class F>
void for_each_directed_position(std::size_t max_n, std::size_t max_arcs, F&& f) {
  for (std::size_t n = 1; n <= max_n; ++n)
    for_each_digraph(n, max_arcs, [&](const DirectedGraph& d) {
      for (Vertex s = 0; s < n; ++s) f(d, s);
    });
}

// Criterion 4: the reduction contract, Wrong Way and the prelude
// corollary, exhaustively; plus the add-to-* characterization through the
// variant engine on the smaller instances.
inline Report reductions(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"reductions"};
  r.limit_seconds = 600;
  const std::size_t max_n = scale == Scale::full ? 5 : 4;
  const std::size_t max_arcs = scale == Scale::full ? 5 : 4;
  std::uint64_t positions = 0, wrong_way = 0, star_sums = 0;
  for_each_directed_position(max_n, max_arcs, [&](const DirectedGraph& d, Vertex s) {
    ++positions;
    GGSolver gg(d);
    const bool n_position = gg.wins(s);
    auto red = gg_to_ug(make_directed_position(d, s));
    ExactSolver exact(red.position.graph);
    const std::uint32_t v = exact.solve(s).value();
    r.expect(n_position ? v >= 2 : v == 1, [&] {
      return "reduced value " + std::to_string(v) + " for " + detail::describe(d, s);
    });
    for (const auto& ag : red.gadgets.arcs) {
      VertexMask mask(red.position.graph.vertex_count());
      mask.remove(ag.y);
      const std::uint32_t w = exact.solve(ag.d, mask).value();
      ++wrong_way;
      r.expect(w == 2 || w == 3, [&] { return "Wrong Way value " + std::to_string(w); });
    }
    const std::uint32_t pv = exact_grundy(add_prelude(red.position)).value();
    r.expect(pv == (v == 1 ? 1u : 2u), [&] { return "prelude value " + std::to_string(pv); });
    if (d.vertex_count() <= 4 && d.arc_count() <= 4) {
      ++star_sums;
      SumState sum{{make_plain(red.position), make_plain(make_position(Graph::from_edges(2, std::vector<Edge>{{0, 1}}), 0))}};
      r.expect(!variant_grundy(sum).is_zero() == n_position,
               [&] { return "sum with * disagrees for " + detail::describe(d, s); });
    }
  });
  r.detail = std::to_string(positions) + " directed positions (n<=" + std::to_string(max_n) +
             ", arcs<=" + std::to_string(max_arcs) + "), " + std::to_string(wrong_way) +
             " Wrong Way entries, " + std::to_string(star_sums) + " sums with *";
  detail::finish(r, t);
  return r;
}

// Criterion 5: sum law and pass parity on the variant engine.
inline Report variants(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"variants"};
  r.limit_seconds = 300;
  const int trials = scale == Scale::full ? 1000 : 200;
  std::mt19937_64 rng(505);
  auto random_plain = [&](std::size_t max_n) {
    std::size_t n = 1 + rng() % max_n;
    double p = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
    return make_plain(make_position(random_graph(n, p, rng), static_cast<Vertex>(rng() % n)));
  };
  for (int trial = 0; trial < trials; ++trial) {
    PlainState a = random_plain(8), b = random_plain(8);
    auto ga = variant_grundy(a), gb = variant_grundy(b);
    r.expect(variant_grundy(SumState{{a, b}}) == (ga ^ gb), [&] { return "sum law violated"; });
  }
  for (int trial = 0; trial < trials; ++trial) {
    PlainState a = random_plain(8);
    std::uint32_t k = static_cast<std::uint32_t>(rng() % 5);
    r.expect(variant_grundy(PassState{a, k, k}) == (variant_grundy(a) ^ Nimber(k % 2)),
             [&] { return "pass parity violated at k=" + std::to_string(k); });
  }
  r.detail = std::to_string(trials) + " sums and " + std::to_string(trials) + " pass games, components n<=8";
  detail::finish(r, t);
  return r;
}

// Seeds of value * (an edge) and *2 (path l-t-u-w, token t).
inline Position chain_seed(std::uint32_t value) {
  std::vector<Edge> edges;
  std::size_t n = value == 1 ? 2 : 4;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_position(Graph::from_edges(n, edges), value == 1 ? 0 : 1);
}

// Criterion 6: shift chains and separation instances take exactly the two
// prescribed values.
inline Report chains(Scale = Scale::full) {
  detail::Timer t;
  Report r{"chains"};
  r.limit_seconds = 600;
  for (std::uint32_t seed : {1u, 2u}) {
    Position p = chain_seed(seed);
    r.expect(exact_grundy(p).value() == seed, [&] { return "seed value"; });
    for (std::uint32_t to = 2; to <= 5; ++to) {
      std::uint32_t want = seed == 2 ? to : to - 1;
      std::uint32_t got = exact_grundy(shift_nimber_chain(p, 2, to)).value();
      r.expect(got == want, [&] {
        return "shift 2->" + std::to_string(to) + " of *" + std::to_string(seed) + " gave " + std::to_string(got);
      });
    }
    for (std::uint32_t target = 3; target <= 5; ++target) {
      std::uint32_t want = seed == 2 ? target : 2;
      std::uint32_t got = exact_grundy(build_separation_instance(p, 2, target)).value();
      r.expect(got == want, [&] {
        return "separation k=2 p=" + std::to_string(target) + " of *" + std::to_string(seed) + " gave " +
               std::to_string(got);
      });
    }
  }
  // Chains resumed from a higher base.
  for (std::uint32_t seed : {1u, 2u}) {
    Position mid = shift_nimber_chain(chain_seed(seed), 2, 3);
    std::uint32_t got = exact_grundy(shift_nimber_chain(mid, 3, 5)).value();
    r.expect(got == (seed == 2 ? 5u : 4u), [&] { return "resumed chain 3->5"; });
  }
  r.detail = "seeds * and *2; shifts to *2..*5, separations p=3..5, resumed chains";
  detail::finish(r, t);
  return r;
}

// The playability graph of uno_from_labeling(l) equals H under the explicit
// bijection (top card -> token, each hand in vertex order).
inline bool uno_round_trips(const UnoLabeling& l) {
  SwapUnoState s = uno_from_labeling(l);
  Position play = uno_playability_position(s);
  const Graph& h = l.graph.graph;
  const Vertex token = l.graph.token;
  if (play.graph.vertex_count() != h.vertex_count() || play.graph.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> to_h{token};
  for (int side : {1 - l.side[token], static_cast<int>(l.side[token])})
    for (Vertex v = 0; v < h.vertex_count(); ++v)
      if (v != token && l.side[v] == side) to_h.push_back(v);
  for (auto [u, v] : play.graph.edges())
    if (!h.has_edge(to_h[u], to_h[v])) return false;
  return true;
}

// Criterion 7: labeling and round trip on every bipartite reduction image
// from criterion 4, and Swap Uno against its sum-with-* image.
inline Report uno(Scale scale = Scale::full) {
  detail::Timer t;
  Report r{"uno"};
  r.limit_seconds = 600;
  const std::size_t max_n = scale == Scale::full ? 5 : 4;
  const std::size_t max_arcs = scale == Scale::full ? 5 : 4;
  std::uint64_t instances = 0, labeled = 0, conflicts = 0;
  for_each_directed_position(max_n, max_arcs, [&](const DirectedGraph& d, Vertex s) {
    if (!bipartition(underlying_graph(d))) return;
    ++instances;
    auto red = gg_to_ug(make_directed_position(d, s));
    try {
      UnoLabeling l = label_for_uno(red.position, red.gadgets);
      ++labeled;
      r.expect(check_uno_labeling(l) && uno_round_trips(l), [&] { return "bad labeling for " + detail::describe(d, s); });
    } catch (const LabelingConflict&) {
      ++conflicts;
      r.expect(false, [&] { return std::string("labeling_conflict for ") + detail::describe(d, s); });
    }
  });
  const int trials = scale == Scale::full ? 2000 : 300;
  std::mt19937_64 rng(707);
  std::uint64_t uno_failures_before = r.failures;
  for (int trial = 0; trial < trials; ++trial) {
    SwapUnoState s;
    for (auto& hand : s.hands)
      for (std::size_t k = rng() % 5; k > 0; --k)
        hand.push_back(Card{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)});
    if (rng() % 2) s.top = Card{static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)};
    s.swap_used = rng() % 4 == 0;
    s.to_move = static_cast<int>(rng() % 2);
    r.expect(variant_grundy(s) == variant_grundy(swap_uno_to_ug(s)), [&] { return "Swap Uno differs from its image"; });
  }
  r.detail = "labeling: " + std::to_string(labeled) + "/" + std::to_string(instances) +
             " bipartite reduction images labeled, " + std::to_string(conflicts) +
             " labeling_conflict; Swap Uno vs image: " + std::to_string(trials) + " games, " +
             std::to_string(r.failures - uno_failures_before) + " mismatches";
  detail::finish(r, t);
  return r;
}

}  // namespace ugeo::verify
