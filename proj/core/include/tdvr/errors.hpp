#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdvr {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold
/// (ring mismatch, infeasible division, wrong flavor, zero input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public PreconditionError {
 public:
  RingMismatch() : PreconditionError("operands live in different rings") {}
  using PreconditionError::PreconditionError;
};

class DivisionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Completion exceeded its configured pair budget. Never a silent truncation.
class PairBudgetExceeded : public Error {
 public:
  explicit PairBudgetExceeded(std::size_t budget)
      : Error("pair budget of " + std::to_string(budget) + " exhausted"), budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

/// An internal result failed its own verification (e.g. a standard basis
/// that does not generate the associated graded module).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, line, column)), line_(line), column_(column), bare_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& bare_message() const noexcept { return bare_; }

 private:
  static std::string format(const std::string& m, std::size_t line, std::size_t column) {
    if (line == 0) return m;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m;
  }

  std::size_t line_;
  std::size_t column_;
  std::string bare_;
};

}  // namespace tdvr
