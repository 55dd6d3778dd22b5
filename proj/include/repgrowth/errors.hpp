#pragma once

#include <stdexcept>
#include <string>

namespace repgrowth {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (config files, CLI overrides,
/// unknown Cartan types, non-dominant highest weights, bad windows).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.  The message carries a witness
/// (the offending weight and the identity that broke).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The weight distribution does not span the ambient lattice, so the
/// Gaussian model has a singular covariance in an essential direction.
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

/// A request outside the supported parameter range (e.g. the inclusion
/// exclusion expansion over subsets of positive roots for large u).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace repgrowth
