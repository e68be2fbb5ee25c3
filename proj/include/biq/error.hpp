#pragma once

#include <stdexcept>
#include <string>

namespace biq {

/// Malformed input text (JSON syntax, bad rational strings, wrong field types).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural invariant (shapes, ids, ranges).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. a disconnected biquiver).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A transition matrix that had to be invertible was not.
class SingularMatrixError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

}  // namespace biq
