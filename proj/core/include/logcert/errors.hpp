#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero, mixing incompatible radicands, bad squarefree input.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold (zero polynomial, N < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational function or recurrence coefficient is undefined at an integer.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, std::string index)
      : Error(what + " (n = " + index + ")"), index_(std::move(index)) {}

  const std::string& index() const noexcept { return index_; }

 private:
  std::string index_;
};

/// Recurrence spec-file syntax error; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace logcert
