#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msomb {

/// Malformed input text (edge lists, CSV files). Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Precondition on arguments violated (ordering, ranges, missing parameters).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Regression input that has no well-defined fit.
class DegenerateDataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An identity that holds mathematically was violated numerically.
class IdentityViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace msomb
