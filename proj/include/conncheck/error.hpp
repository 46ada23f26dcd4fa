#pragma once

#include <stdexcept>
#include <string>

namespace conncheck {

/// Mismatched ambient rings, wrong exponent-vector lengths, malformed values.
class StructuralError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An operation refused to run because a documented precondition is not met
/// (non-equidimensional ring for a height computation, missing minimal
/// primes, combinatorial caps, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. Carries a 1-based line/column.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace conncheck
