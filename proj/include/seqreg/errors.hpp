#pragma once

#include <stdexcept>
#include <string>

namespace seqreg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (arity mismatch, unit element
/// where an element of the maximal ideal is required, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An iteration budget was exhausted. Never a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A cross-check that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A requested lift does not exist (element outside the span).
class NotInSpan : public Error {
 public:
  using Error::Error;
};

/// DSL or polynomial syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace seqreg
