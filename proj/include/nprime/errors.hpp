#pragma once

#include <stdexcept>
#include <string>

namespace nprime {

// Bad arguments to an operation (out-of-range vertex, empty input, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A labeling that is not a bijection onto {1..n}.
class LabelingInvalid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family parameters outside the family's valid range.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A labeler was asked for parameters its construction does not cover.
// Callers may fall back to the exact search.
class UnsupportedParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A tree whose shape the constructive procedure cannot handle.
class UnsupportedStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A transformation precondition does not hold; the message names the clause.
class PreconditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nprime
