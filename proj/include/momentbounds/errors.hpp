#pragma once

#include <stdexcept>
#include <string>

namespace momentbounds {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A sample, matrix or polynomial with no data where data is required.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Weights do not sum to 1 (and renormalization was not requested).
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// An operation that divides by the variance was given a zero-variance sample.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// A moment of the requested order is not stored in the MomentSet.
class MissingMomentError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the hypotheses of the requested operation
/// (non-Hermitian matrix for a Hermitian-only bound, 1x1 matrix for a
/// pairwise bound, and so on).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Polynomial degree too small for the requested operation.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// power_sums was given a polynomial whose x^{n-1} coefficient is not zero.
class NotDepressedError : public Error {
 public:
  using Error::Error;
};

/// Coefficient data (or a root count) incompatible with an all-real root set.
class RealRootednessViolation : public Error {
 public:
  using Error::Error;
};

/// An iterative solver failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A caller-asserted precondition was found to be false in verification mode.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or inline literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A verification-mode cross-check failed (bound vs oracle disagreement).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace momentbounds
