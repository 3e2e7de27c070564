#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qseries {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Raised when an argument violates a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The series is not known far enough to answer; the caller should re-expand deeper.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// A series with no known nonzero term was inverted or rooted. Derives from
// InsufficientPrecision: expanding further may reveal the leading term.
class ZeroSeries : public InsufficientPrecision {
 public:
  using InsufficientPrecision::InsufficientPrecision;
};

class RootLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qseries
