#pragma once

#include <stdexcept>
#include <string>

namespace permutiple {

// Base for every error raised by the library. Each subclass maps to a
// distinct CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// Digit out of range, empty digit vector, mismatched bases or lengths.
class InvalidDigits : public Error {
 public:
  using Error::Error;
};

// A value does not fit in the requested number of digits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The carry recurrence has no integral solution in [0, n-1].
class InvalidAlignment : public Error {
 public:
  using Error::Error;
};

// A digit pair that is not an edge of the mother graph.
class RejectedInput : public Error {
 public:
  using Error::Error;
};

// The state walk induced by a string does not start and end at state 0.
class NotAnLWalk : public Error {
 public:
  using Error::Error;
};

// An enumeration produced more results than its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A brute-force scan would exceed its configured candidate budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownCycleIndex : public Error {
 public:
  using Error::Error;
};

}  // namespace permutiple
