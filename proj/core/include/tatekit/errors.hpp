#ifndef TATEKIT_ERRORS_HPP
#define TATEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kt {

// Malformed input: bad syntax, wrong field, out-of-contract arguments.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& w) : std::runtime_error(w) {}
};

// Input is well-formed but a mathematical precondition fails
// (non-regular sequence where one is required, odd divided power, ...).
struct MathError : std::runtime_error {
  explicit MathError(const std::string& w) : std::runtime_error(w) {}
};

// A configured resource bound was hit before the computation finished.
struct CapError : std::runtime_error {
  explicit CapError(const std::string& w) : std::runtime_error(w) {}
};

}  // namespace kt

#endif
