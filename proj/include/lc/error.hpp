#pragma once

#include <stdexcept>
#include <string>

namespace lc {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An assignment did not cover every atom of the formula under evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A brute-force decision procedure was asked to enumerate too many atoms.
class AtomLimitError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values (tolerances, sample counts, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lc
