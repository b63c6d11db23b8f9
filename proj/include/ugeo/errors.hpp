#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ugeo {

// Base of every domain error. kind() is a stable machine-readable tag used by
// the CLI diagnostics and the HTTP error bodies.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Input text rejected. line and column are 1-based; offset is a byte offset.
// Any of them is -1 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::string kind, const std::string& message, long line = -1,
             long column = -1, long offset = -1)
      : Error(std::move(kind), message),
        line_(line),
        column_(column),
        offset_(offset) {}
  long line() const noexcept { return line_; }
  long column() const noexcept { return column_; }
  long offset() const noexcept { return offset_; }

 private:
  long line_, column_, offset_;
};

// Graph or position invariant violated by a caller-supplied structure.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t states_visited)
      : Error("budget_exceeded",
              "search budget exceeded after " + std::to_string(states_visited) +
                  " states"),
        states_visited_(states_visited) {}
  std::uint64_t states_visited() const noexcept { return states_visited_; }

 private:
  std::uint64_t states_visited_;
};

class DegreeViolation : public Error {
 public:
  DegreeViolation(std::uint32_t vertex, std::size_t degree, std::size_t limit)
      : Error("degree_violation",
              "vertex " + std::to_string(vertex) + " has degree " +
                  std::to_string(degree) + " > " + std::to_string(limit)),
        vertex_(vertex) {}
  std::uint32_t vertex() const noexcept { return vertex_; }

 private:
  std::uint32_t vertex_;
};

// A solver callback (or an internal invariant of a proof-derived algorithm)
// produced an answer that the algorithm's preconditions rule out.
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& message)
      : Error("callback_contract_violation", message) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& message)
      : Error("cap_exceeded", message) {}
};

class InvalidRange : public Error {
 public:
  explicit InvalidRange(const std::string& message)
      : Error("invalid_range", message) {}
};

class NotBipartite : public Error {
 public:
  explicit NotBipartite(const std::string& message)
      : Error("not_bipartite", message) {}
};

class LabelingConflict : public Error {
 public:
  explicit LabelingConflict(const std::string& message)
      : Error("labeling_conflict", message) {}
};

class IllegalMove : public Error {
 public:
  explicit IllegalMove(const std::string& message)
      : Error("illegal_move", message) {}
};

}  // namespace ugeo
