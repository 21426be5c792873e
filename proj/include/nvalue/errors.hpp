#pragma once

#include <stdexcept>
#include <string>

namespace nvalue {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a binary polynomial operation live over different variable lists.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

/// An exponent was not divisible by the requested divisor. Raised by the
/// construction only when something upstream is broken.
class IndivisibleExponent : public Error {
 public:
  using Error::Error;
};

/// The cyclotomic product kept a nonzero coefficient at some t^i, i > 0.
class NonConstantInT : public Error {
 public:
  using Error::Error;
};

/// A rational coefficient failed to clear to an integer.
class NonIntegralCoefficient : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Newton polytopes are only computed for 1 or 2 variables, or for
/// homogeneous polynomials in 3 variables.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class RootFindingFailure : public Error {
 public:
  using Error::Error;
};

class NotPrimePower : public Error {
 public:
  using Error::Error;
};

class NotEven : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace nvalue
