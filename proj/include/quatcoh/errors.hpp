#pragma once

#include <stdexcept>
#include <string>

namespace quatcoh {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input and parsing failures (CLI exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
};
class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};
class CoefficientParseError : public ParseError {
 public:
  using ParseError::ParseError;
};
class UnboundParameter : public ParseError {
 public:
  using ParseError::ParseError;
};

// Arithmetic.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};
class PoleAtBinding : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Validation failures (CLI exit code 1).
class ValidationError : public Error {
 public:
  using Error::Error;
};
class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class QuaternionicRelationFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class IntegrabilityFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class EigenspaceDimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class IntegrabilityViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotHolomorphic : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class NotReal : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Usage errors for operations with a restricted domain.
class NotASubspace : public Error {
 public:
  using Error::Error;
};
class NotSL2 : public Error {
 public:
  using Error::Error;
};
class NotBidegree20 : public Error {
 public:
  using Error::Error;
};
class NotGauduchon : public Error {
 public:
  using Error::Error;
};
class NotAeppliClosed : public Error {
 public:
  using Error::Error;
};
class SingularGram : public Error {
 public:
  using Error::Error;
};

// A structural identity that must hold failed (CLI exit code 3). Signals
// either an input outside the supported class or an engine bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};
class InternalInconsistency : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};
class RepresentativeDependence : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};
class DecompositionFailure : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

}  // namespace quatcoh
