#pragma once

#include <stdexcept>
#include <string>

namespace s3min {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPoint : Error {
  using Error::Error;
};

struct InvalidCircle : Error {
  using Error::Error;
};

struct NonOrthogonalGenerator : Error {
  using Error::Error;
};

struct ClosureCapExceeded : Error {
  using Error::Error;
};

struct NonFiberPreservingElement : Error {
  using Error::Error;
};

struct InvalidN : Error {
  using Error::Error;
};

struct NotAPrismEdge : Error {
  using Error::Error;
};

struct UnknownFaceTag : Error {
  using Error::Error;
};

struct HypothesisViolated : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  NonConvergence(int iterations, double residual)
      : Error("plateau solver failed to converge after " + std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        iterations(iterations),
        residual(residual) {}
  int iterations;
  double residual;
};

struct BoundaryAssemblyFailure : Error {
  using Error::Error;
};

struct WeldFailure : Error {
  using Error::Error;
};

struct NotClosed : Error {
  using Error::Error;
};

struct PoleOnSurface : Error {
  using Error::Error;
};

struct IOFailure : Error {
  using Error::Error;
};

struct ConfigParseError : Error {
  using Error::Error;
};

}  // namespace s3min
