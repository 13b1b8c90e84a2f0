#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdd {

/// Malformed decision-diagram structure: arity, level ordering, kind or register mismatch.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-finite value handed to the complex table or arithmetic.
class NumericDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller supplied an argument outside the documented range (index, dimension, level).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Broken internal bookkeeping, e.g. a reference count dropping below zero.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Circuit text diagnostics carry a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mdd
