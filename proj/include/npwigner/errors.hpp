#pragma once

#include <stdexcept>
#include <string>

namespace npw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented invariant (non-Hermitian matrix, bad weights, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Fock cutoff too small for the requested state or index.
class CutoffError : public ValidationError {
 public:
  CutoffError(const std::string& what, int suggested_cutoff = -1)
      : ValidationError(what), suggested_cutoff_(suggested_cutoff) {}

  // Smallest cutoff that satisfies the tolerance, or -1 if not applicable.
  int suggested_cutoff() const { return suggested_cutoff_; }

 private:
  int suggested_cutoff_;
};

// Sampling grid too coarse for an exact periodic quadrature.
class QuadratureError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace npw
