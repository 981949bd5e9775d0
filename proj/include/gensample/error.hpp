#pragma once

#include <stdexcept>
#include <string>

namespace gensample {

/// Bad arguments: non-finite coordinates, empty patterns, out-of-range indices.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation that cannot produce a meaningful number (singular systems,
/// NaN entries, truncation that drops too much spectral mass).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gensample
