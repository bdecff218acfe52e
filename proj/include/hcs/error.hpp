#pragma once

#include <stdexcept>
#include <string>

namespace hcs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of a mathematical operation does not hold
/// (zero divisor, improper ideal, unsupported presentation, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text or session syntax.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hcs
