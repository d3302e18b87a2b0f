#pragma once

#include <stdexcept>
#include <string>

namespace ospchar {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Substituting zero into a negative power.
class PoleAtZero : public Error {
 public:
  using Error::Error;
};

/// Division that leaves a remainder. `remainder()` holds the offending term.
class NonExactDivision : public Error {
 public:
  NonExactDivision(const std::string& what, std::string remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

/// A formula was called outside its stated hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree by construction did not. Always a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ospchar
