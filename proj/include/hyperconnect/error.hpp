#pragma once

#include <stdexcept>
#include <string>

namespace hyperconnect {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain a formula is stated for.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator parameter produced an exact zero factor.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// The requested mode needs a field or expansion that is not available,
/// e.g. an infinite product over exact rationals.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A truncated series did not settle within its term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Operands come from different coefficient fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The power collection method cannot isolate the varied parameter.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// A linear system or coefficient formula is singular at the given point.
class SingularError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperconnect
