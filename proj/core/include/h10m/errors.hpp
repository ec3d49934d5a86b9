#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace h10m {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational function would need a zero denominator.
class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A mechanical check refuted a statement that must hold. Never expected to
// fire; when it does, the message carries the offending object.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace h10m
