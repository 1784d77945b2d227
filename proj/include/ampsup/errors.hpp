#pragma once

#include <stdexcept>
#include <string>

namespace ampsup {

// Bad arguments to an operation (non-prime place, det <= 0, odd weight, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent algebra/order configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// verify_order failed, or an internal arithmetic consistency check tripped. CLI exit code 3.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration / coset budget exhausted. CLI exit code 4.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncation tail above the requested tolerance. CLI exit code 5.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerically ill-conditioned majorant (Cholesky failure).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ampsup
