#pragma once

#include <stdexcept>
#include <string>

namespace guise {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a model file or formula, with 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A parsed description that does not form a valid model, or a formula that
/// does not resolve against one.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or enumeration would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace guise
