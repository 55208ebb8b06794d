#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsing {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input. Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Operand dimensions do not match the operation.
class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class NotGorenstein : public InputError {
 public:
  using InputError::InputError;
};

// Group closure exceeded the configured bound. Maps to exit code 3.
class GroupTooLarge : public Error {
 public:
  GroupTooLarge(std::size_t partial, std::size_t limit)
      : Error("group closure exceeded max order " + std::to_string(limit) +
              " (" + std::to_string(partial) + " elements found)"),
        partial_(partial),
        limit_(limit) {}
  std::size_t partial_count() const noexcept { return partial_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t partial_;
  std::size_t limit_;
};

// A documented precondition of an algorithm does not hold (exit code 4).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class NotCanonical : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsing
