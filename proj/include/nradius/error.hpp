#pragma once

#include <stdexcept>
#include <string>

namespace nradius {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, mismatched operands, unknown names. The CLI
// maps this family to exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

class ParseError : public UsageError {
public:
  using UsageError::UsageError;
};

class InvalidMatrix : public UsageError {
public:
  using UsageError::UsageError;
};

class DimMismatch : public UsageError {
public:
  using UsageError::UsageError;
};

class AlphaOutOfRange : public UsageError {
public:
  using UsageError::UsageError;
};

class UnknownCheck : public UsageError {
public:
  using UsageError::UsageError;
};

// Numerical failures. The CLI maps this family to exit code 3.
class NumericalError : public Error {
public:
  using Error::Error;
};

class NotHermitian : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NotPSD : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ToleranceUnreachable : public NumericalError {
public:
  using NumericalError::NumericalError;
};

} // namespace nradius
