#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ugeo/constructor.hpp"
#include "ugeo/exact.hpp"

namespace ugeo {

enum class Lemma { grounded, r_to_n, skip_star2, skip_star, not_1_or_2, parity };

inline const char* lemma_name(Lemma l) {
  switch (l) {
    case Lemma::grounded: return "grounded";
    case Lemma::r_to_n: return "r_to_n";
    case Lemma::skip_star2: return "skip_star2";
    case Lemma::skip_star: return "skip_star";
    case Lemma::not_1_or_2: return "not_1_or_2";
    case Lemma::parity: return "parity";
  }
  return "?";
}

struct LemmaCheck {
  std::string state;  // human-readable description of the residual position
  Vertex token = 0;
  std::vector<Vertex> removed;
  std::string expected;  // "0", "*", "*3", ">= *4", ...
  Nimber actual;
  bool passed = false;
};

struct LemmaReport {
  Lemma lemma = Lemma::grounded;
  std::uint32_t n = 0;
  std::vector<LemmaCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  // No residual state satisfies the lemma's hypothesis.
  bool vacuous() const { return checks.empty(); }
};

namespace detail {

// Which associated gadget vertices are removed alongside each removed N_i.
enum class Companion { none, m_side, p_side, both };

inline const char* companion_name(Companion c) {
  switch (c) {
    case Companion::none: return "";
    case Companion::m_side: return " with M-side";
    case Companion::p_side: return " with P-side";
    case Companion::both: return " with M- and P-side";
  }
  return "";
}

class LemmaRunner {
 public:
  LemmaRunner(const LabeledConstruction& c, SolveBudget budget)
      : c_(c), solver_(c.position.graph, budget), n_(c.nimber) {}

  LemmaReport run(Lemma lemma) {
    LemmaReport report;
    report.lemma = lemma;
    report.n = n_;
    if (n_ < 4) return report;
    switch (lemma) {
      case Lemma::grounded: grounded(report, false); break;
      case Lemma::r_to_n: grounded(report, true); break;
      case Lemma::skip_star2: skip(report, Role::M); break;
      case Lemma::skip_star: skip(report, Role::P); break;
      case Lemma::not_1_or_2: not_1_or_2(report); break;
      case Lemma::parity: parity(report); break;
    }
    return report;
  }

 private:
  std::vector<std::uint32_t> ranks_except(std::uint32_t k) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 4; i <= n_; ++i)
      if (i != k) out.push_back(i);
    return out;
  }

  static std::vector<std::vector<std::uint32_t>> subsets(const std::vector<std::uint32_t>& xs) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << xs.size()); ++m) {
      std::vector<std::uint32_t> s;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if ((m >> i) & 1U) s.push_back(xs[i]);
      out.push_back(std::move(s));
    }
    return out;
  }

  Vertex n_vertex(std::uint32_t i) const { return c_.at("N" + std::to_string(i)); }

  void remove_companions(VertexMask& mask, std::uint32_t i, Companion comp) const {
    const bool m = comp == Companion::m_side || comp == Companion::both;
    const bool p = comp == Companion::p_side || comp == Companion::both;
    for (Vertex v = 0; v < c_.labels.size(); ++v) {
      const Label& l = c_.labels[v];
      if (l.rank != i) continue;
      if (m && (l.role == Role::M || l.role == Role::MPart)) mask.remove(v);
      if (p && (l.role == Role::P || l.role == Role::PPart)) mask.remove(v);
    }
  }

  static std::string set_text(const std::vector<std::uint32_t>& s) {
    if (s.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ",N" : "N") + std::to_string(s[i]);
    return out + "}";
  }

  template <class Pred>
  void check(LemmaReport& report, std::string state, Vertex token, const VertexMask& mask,
             std::string expected, Pred ok) {
    LemmaCheck ch;
    ch.state = std::move(state);
    ch.token = token;
    ch.removed = mask.removed_list();
    ch.expected = std::move(expected);
    ch.actual = solver_.solve(token, mask);
    ch.passed = ok(ch.actual);
    report.checks.push_back(std::move(ch));
  }

  // Grounded: token R_k after N_k -> R_k. rToN: token N_p after R_p -> N_p.
  // Removed: some other N_i, optionally with their M- or P-side gadgets.
  void grounded(LemmaReport& report, bool reverse) {
    for (std::uint32_t k = 4; k <= n_; ++k) {
      const std::string sk = std::to_string(k);
      Vertex nk = n_vertex(k), rk = c_.at("R" + sk);
      for (const auto& s : subsets(ranks_except(k))) {
        for (Companion comp : {Companion::none, Companion::m_side, Companion::p_side, Companion::both}) {
          if (s.empty() && comp != Companion::none) continue;
          VertexMask mask(c_.position.graph.vertex_count());
          mask.remove(reverse ? rk : nk);
          for (auto i : s) {
            mask.remove(n_vertex(i));
            remove_companions(mask, i, comp);
          }
          std::string state = reverse ? "R" + sk + "->N" + sk : "N" + sk + "->R" + sk;
          state += ", removed " + set_text(s) + companion_name(comp);
          check(report, state, reverse ? nk : rk, mask, "0",
                [](Nimber v) { return v.is_zero(); });
        }
      }
    }
  }

  // Token on M_k (P_k) after N_k moved there; only N vertices removed.
  void skip(LemmaReport& report, Role head) {
    const char letter = head == Role::M ? 'M' : 'P';
    const std::uint32_t base = head == Role::M ? 1 : 2;
    for (std::uint32_t k = 5; k <= n_; ++k) {
      const std::string sk = std::to_string(k);
      Vertex token = c_.at(std::string(1, letter) + sk);
      for (const auto& s : subsets(ranks_except(k))) {
        VertexMask mask(c_.position.graph.vertex_count());
        mask.remove(n_vertex(k));
        bool lower_removed = false;
        for (auto i : s) {
          mask.remove(n_vertex(i));
          if (i < k) lower_removed = true;
        }
        const std::uint32_t want = lower_removed ? 3 : base;
        check(report, "N" + sk + "->" + letter + sk + ", removed " + set_text(s), token, mask,
              Nimber(want).to_string(), [want](Nimber v) { return v.value() == want; });
      }
    }
  }

  // Token on N_k, only higher-rank N removed.
  void not_1_or_2(LemmaReport& report) {
    for (std::uint32_t k = 4; k <= n_; ++k) {
      std::vector<std::uint32_t> higher;
      for (std::uint32_t i = k + 1; i <= n_; ++i) higher.push_back(i);
      for (const auto& s : subsets(higher)) {
        VertexMask mask(c_.position.graph.vertex_count());
        for (auto i : s) mask.remove(n_vertex(i));
        check(report, "token N" + std::to_string(k) + ", removed " + set_text(s), n_vertex(k),
              mask, ">= *4", [](Nimber v) { return v.value() >= 4; });
      }
    }
  }

  // Token on N_k; N_j (j < k) is the lowest removed rank. Value * when the
  // number of remaining N_p with p > j (N_k included) is odd, *2 when even.
  void parity(LemmaReport& report) {
    for (std::uint32_t k = 4; k <= n_; ++k) {
      for (const auto& s : subsets(ranks_except(k))) {
        if (s.empty() || s.front() >= k) continue;
        const std::uint32_t j = s.front();
        VertexMask mask(c_.position.graph.vertex_count());
        for (auto i : s) mask.remove(n_vertex(i));
        std::uint32_t remaining = 0;
        for (std::uint32_t p = j + 1; p <= n_; ++p)
          if (mask.alive(n_vertex(p))) ++remaining;
        const std::uint32_t want = remaining % 2 == 1 ? 1 : 2;
        check(report,
              "token N" + std::to_string(k) + ", removed " + set_text(s) + ", " +
                  std::to_string(remaining) + " higher N remain",
              n_vertex(k), mask, Nimber(want).to_string(),
              [want](Nimber v) { return v.value() == want; });
      }
    }
  }

  const LabeledConstruction& c_;
  ExactSolver solver_;
  std::uint32_t n_;
};

}  // namespace detail

// Exhaustively checks one lemma over the residual states its hypothesis
// quantifies, on a construction small enough for exact solving.
inline LemmaReport verify_lemma(const LabeledConstruction& c, Lemma lemma, SolveBudget budget = {}) {
  detail::LemmaRunner runner(c, budget);
  return runner.run(lemma);
}

}  // namespace ugeo
