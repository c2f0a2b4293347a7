#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument, malformed file content, or a violated precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A point evaluation produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Requested evaluation point is too close to the integration circle.
class SingularProximityError : public Error {
 public:
  using Error::Error;
};

// Rank-deficient or otherwise unusable design matrix.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

// Series evaluation at a pole (w = 0 for the plus side, z = 0 for the minus side).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Not enough scale separation (or data) for a regression.
class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace annulus
