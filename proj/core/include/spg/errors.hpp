#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spg {

/// Malformed game or strategy description. Carries a 1-based source position
/// when one is known (line == 0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line == 0 ? what
                                     : std::to_string(line) + ":" + std::to_string(column) +
                                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A structurally invalid game graph (deadlock, edge out of a target, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (infinite values where finite
/// ones are required, a strategy that does not reach the target, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configurable size cap was exceeded (exact cycle enumeration, unrolled
/// switching-strategy evaluation, brute-force enumeration).
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace spg
