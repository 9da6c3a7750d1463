#pragma once

#include <stdexcept>
#include <string>

namespace cyclezeta {

// Base of every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An oracle or census would exceed its hard size cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

// Series evaluation outside the certified radius |q^{C'} T| < 1.
class RadiusError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No closed form and no oracle for the requested cycle dimension.
class UnsupportedDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

class AllZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroPolynomial : public DomainError {
 public:
  using DomainError::DomainError;
};

// A count that should be integral was not; always a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclezeta
