#pragma once

#include <stdexcept>
#include <string>

namespace prioclust {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or flag value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an instance invariant (metric, ranges).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An algorithm was asked to run on an instance outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A proven property of the algorithm failed to hold. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the input exceeds its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// No facility set satisfies the coverage requirements at any alpha.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An iterative search stopped at its iteration cap without an answer.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

}  // namespace prioclust
