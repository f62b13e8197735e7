#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catcom {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

// Structurally invalid data handed to an operation (arity mismatch, wrong
// codomain, non-bijective object map, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A truncation bound is too small for the requested computation.
class BoundError : public Error {
 public:
  BoundError(const std::string& message, std::size_t required)
      : Error(message + " (requires bound " + std::to_string(required) + ")"),
        required_(required) {}

  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

// A configured resource ceiling (element count, search nodes) was exceeded.
class LimitError : public Error {
 public:
  LimitError(const std::string& message, std::string attempted)
      : Error(message + " (attempted " + attempted + ")"),
        attempted_(std::move(attempted)) {}

  const std::string& attempted() const { return attempted_; }

 private:
  std::string attempted_;
};

// A tabulated structure lacks an entry it was asked for, or an operation
// produced a value outside the tabulated carrier.
class ClosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace catcom
