#pragma once

#include <stdexcept>
#include <string>

namespace bzwave {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// alpha <= 0: the block determinant degenerates (physical singularity).
struct NonPositiveAlpha : Error {
  using Error::Error;
};

struct NonPositiveF : Error {
  using Error::Error;
};

struct NonPositiveRadius : Error {
  using Error::Error;
};

struct NonPositiveScale : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

// (dx alpha)^2 - (dt alpha)^2 within tolerance of zero; the density
// formalism is inapplicable at this point.
struct NullGradient : Error {
  using Error::Error;
};

// |lambda0 + lambda_tilde| dropped below the degeneracy guard.
struct LambdaDegenerate : Error {
  using Error::Error;
};

struct CflViolation : Error {
  using Error::Error;
};

struct BoundaryContamination : Error {
  using Error::Error;
};

struct GridMismatch : Error {
  using Error::Error;
};

struct QuadratureFailure : Error {
  using Error::Error;
};

struct OutsideDomain : Error {
  using Error::Error;
};

// (w - beta)^2 <= alpha^2: the soliton pole function is not real.
struct ComplexPole : Error {
  using Error::Error;
};

struct PoleCrossing : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace bzwave
