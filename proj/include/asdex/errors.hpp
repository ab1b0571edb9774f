#pragma once

#include <stdexcept>
#include <string>

namespace asdex {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or arguments (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Bad input data: bounds violations, shape mismatches, malformed files,
/// degenerate responses (CLI exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: ill-conditioning, eigensolver non-convergence,
/// degenerate spectra (CLI exit code 4).
class NumericsError : public Error {
 public:
  using Error::Error;
};

}  // namespace asdex
