#pragma once

#include <stdexcept>
#include <string>

namespace climbdesign {

/// A parameter violates one of its documented invariants.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A force-balance denominator is (numerically) zero; the requested quantity
/// has no finite value at this configuration.
class SingularConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative search exhausted its cap without finding a solution.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config or catalog text could not be parsed; message carries the line number.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace climbdesign
