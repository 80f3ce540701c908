#pragma once

#include <stdexcept>
#include <string>

namespace csdelay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the validity window of a model.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A sampling grid is too coarse for the requested computation.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Two grids that must be identical or Fourier duals are not.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A wave packet carries no energy (complete absorption).
class ZeroNormError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace csdelay
