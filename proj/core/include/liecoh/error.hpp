#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or ambient dimensions do not match.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A Gram matrix that must be symmetric positive definite is not.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A subspace expected to be preserved by a map or action is not.
class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

/// z(s) + [s,s] does not recover s.
class NotReductive : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The relative Chevalley-Eilenberg complex would exceed the configured size cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Splitting of the adjoint commutant over Q was not possible.
class SplittingFailed : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogEntry : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed. Indicates a bug or an input that
/// slipped through validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecoh
