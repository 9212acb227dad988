#pragma once

#include <stdexcept>
#include <string>

namespace apolar {

/// A precondition on a mathematical input was violated (zero socle, degree
/// out of range, non-linear form where a linear one is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial or JSON text could not be parsed. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// The input lies outside the documented computational envelope.
class EnvelopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A slope fell outside every interval generated from the exceptional
/// bundles up to the configured rank bound.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apolar
