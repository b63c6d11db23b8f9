#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

#include "ugeo/degree3.hpp"
#include "ugeo/errors.hpp"
#include "ugeo/nimber.hpp"

namespace ugeo {

struct Degree2Stats {
  std::uint64_t oracle_calls = 0;
  std::uint64_t depth = 0;
};

// Grundy value of a game in which every position has at most two options,
// given only an option enumerator and a winnability oracle. Zero positions
// return 0; a Fuzzy position with two options has one Zero option, and the
// other is either Zero (value *) or Fuzzy with value x in {*, *2} (value
// *(3 - x)), so the value is found by following the chain of Fuzzy options.
template <class State, class Options, class Winnable>
  requires std::invocable<Options, const State&> && std::predicate<Winnable, const State&>
Nimber abstract_degree2_grundy(const State& root, Options options, Winnable winnable,
                               Degree2Stats* stats = nullptr) {
  Degree2Stats local;
  auto ask = [&](const State& s) {
    ++local.oracle_calls;
    return static_cast<bool>(winnable(s));
  };
  if (!ask(root)) {
    if (stats) *stats = local;
    return Nimber(0);
  }
  State current = root;
  std::uint64_t depth = 0;
  while (true) {
    std::vector<State> opts = options(current);
    if (opts.empty())
      throw ContractViolation("oracle reported Fuzzy for a position without options");
    if (opts.size() > 2)
      throw ContractViolation("position has " + std::to_string(opts.size()) +
                              " options; the game is not degree-2");
    if (opts.size() == 1) {
      if (ask(opts[0]))
        throw ContractViolation("oracle reported Fuzzy but the only option is Fuzzy");
      break;
    }
    bool w0 = ask(opts[0]);
    bool w1 = ask(opts[1]);
    if (w0 && w1)
      throw ContractViolation("oracle reported Fuzzy but no Zero option exists");
    if (!w0 && !w1) break;
    current = w0 ? opts[0] : opts[1];
    ++depth;
  }
  Nimber value(1);
  for (std::uint64_t i = 0; i < depth; ++i) value = three_minus(value);
  local.depth = depth;
  if (stats) *stats = local;
  return value;
}

}  // namespace ugeo
