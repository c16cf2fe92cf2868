#pragma once

#include <stdexcept>
#include <string>

namespace semi {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation that needs an associative table was given something else
// (non-associative, or associativity never validated).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class NotIdempotentError : public Error {
 public:
  using Error::Error;
};

// No idempotent exists where one is required. Cannot happen on a finite
// semigroup, so seeing it after associativity has been checked means a bug.
class NoIdempotentError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree (e.g. lzero(e) and Se) produced different sets.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The input does not have the required shape (e.g. T is not a rectangular
// band, or e is not a member of T).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace semi
