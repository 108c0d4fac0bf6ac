#pragma once

#include <stdexcept>
#include <string>

namespace kottler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No positive horizon root exists for the requested (kappa, mass).
class MassOutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver ran out of budget. Indicates a bug, not bad input.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// dpsi/du at the degenerate horizon is 0/0; request the limit explicitly.
class DegenerateDerivative : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class CriticalPoint : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

class ConstraintBlowup : public Error {
 public:
  using Error::Error;
};

/// A profile does not reach far enough for an asymptotic estimate.
class TailTooShort : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace kottler
