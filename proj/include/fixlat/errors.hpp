#pragma once

#include <stdexcept>
#include <string>

namespace fixlat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric certification failures. The CLI maps these to exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A singular value or pivot fell inside the grey zone (rank_tol, 10*rank_tol).
class AmbiguousRank : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Two distinct group elements are closer than the separation certificate allows.
class SeparationViolated : public NumericError {
 public:
  using NumericError::NumericError;
};

class NotFiniteOrder : public NumericError {
 public:
  using NumericError::NumericError;
};

class NotOrthogonal : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularMatrix : public NumericError {
 public:
  using NumericError::NumericError;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class AlreadyContainsJ : public Error {
 public:
  using Error::Error;
};

class NotIndexTwo : public Error {
 public:
  using Error::Error;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

class NotRotationGroup : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class UnsupportedMixedPair : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class WrongDimension : public Error {
 public:
  using Error::Error;
};

class NotStrictCodimTwo : public Error {
 public:
  using Error::Error;
};

}  // namespace fixlat
