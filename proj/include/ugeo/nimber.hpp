#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ugeo/errors.hpp"

namespace ugeo {

// Grundy value *n.
class Nimber {
 public:
  constexpr Nimber() = default;
  constexpr explicit Nimber(std::uint32_t value) : value_(value) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Nimber operator^(Nimber a, Nimber b) { return Nimber(a.value_ ^ b.value_); }
  friend constexpr auto operator<=>(Nimber, Nimber) = default;

  // "0", "*", "*2", ...
  std::string to_string() const {
    if (value_ == 0) return "0";
    if (value_ == 1) return "*";
    return "*" + std::to_string(value_);
  }

 private:
  std::uint32_t value_ = 0;
};

inline constexpr Nimber nim_sum(Nimber a, Nimber b) { return a ^ b; }

// Smallest non-negative integer absent from values (duplicates allowed).
inline Nimber mex(std::span<const Nimber> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values)
    if (v.value() <= values.size()) seen[v.value()] = true;
  std::uint32_t m = 0;
  while (seen[m]) ++m;
  return Nimber(m);
}

inline Nimber mex(std::initializer_list<Nimber> values) {
  return mex(std::span<const Nimber>(values.begin(), values.size()));
}

struct SolveBudget {
  std::uint64_t max_states = 20'000'000;
  std::uint64_t max_millis = 120'000;
};

// Counts visited states against a SolveBudget; throws BudgetExceeded.
class BudgetMeter {
 public:
  explicit BudgetMeter(SolveBudget budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++states_;
    if (states_ > budget_.max_states) throw BudgetExceeded(states_);
    if ((states_ & 1023U) == 0) {
      auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
      if (static_cast<std::uint64_t>(elapsed) > budget_.max_millis) throw BudgetExceeded(states_);
    }
  }
  std::uint64_t states() const { return states_; }

 private:
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t states_ = 0;
};

}  // namespace ugeo
