#pragma once

#include <stdexcept>
#include <string>

namespace tdual {

/// Malformed arguments: dimension mismatches, out-of-domain parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pair or class violates the constraint that makes it well defined.
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The bar-complex oracle refuses to build matrices past its size guard.
class OracleGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tdual
