#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

// Base of every error thrown by the library. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad indices, self-loops, non-edges where an edge is required.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A structural hypothesis of an algorithm does not hold (e.g. tree-width too large).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exact search ran out of its time or node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A produced certificate failed its own check. Always a bug.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace arbor
