#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hardy {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Result not representable in double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Pointwise evaluation failed (division by zero, log of a nonpositive value, ...).
class EvalError : public Error {
 public:
  using Error::Error;
};

// An integral or bound is infinite where a finite value is required.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// An iterative scheme failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
