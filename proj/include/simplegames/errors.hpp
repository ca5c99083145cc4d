#pragma once

#include <stdexcept>
#include <string>

namespace simplegames {

/// Malformed arguments: player index out of range, bad thresholds, size caps.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input, with a 1-based position.
class ParseError : public InvalidInput {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation needs a complete game but two players are incomparable.
class CompletenessViolation : public std::runtime_error {
public:
  CompletenessViolation(int first, int second)
      : std::runtime_error("game is not complete: players " + std::to_string(first) + " and " +
                           std::to_string(second) + " are incomparable"),
        first_(first),
        second_(second) {}
  int first() const { return first_; }
  int second() const { return second_; }

private:
  int first_;
  int second_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace simplegames
