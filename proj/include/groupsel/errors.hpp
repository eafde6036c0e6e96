#pragma once

#include <stdexcept>
#include <string>

namespace groupsel {

// Raised when an input violates a documented precondition (bad dimensions,
// non-Hermitian data, malformed files, out-of-range parameters).
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a numerical routine cannot proceed (singular Gram matrix,
// failed factorization, non-finite values).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groupsel
