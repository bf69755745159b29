#pragma once

#include <stdexcept>
#include <string>

namespace wz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different variable lists.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

/// Division by the zero polynomial or zero rational function.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A denominator vanished at an evaluation point.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Value outside the domain of a factor (e.g. factorial of a negative integer).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Term is not hypergeometric in the supported representation.
class NotHypergeometric : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Gosper degree bound exceeded the configured cap.
class BoundOverflow : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wz
