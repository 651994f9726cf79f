#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semico {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size bound (component count, family size, integer range) was exceeded.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t bound)
      : Error(what), bound_(bound) {}

  /// The violated bound.
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

/// Checked integer arithmetic left the 64-bit range.
class OverflowError : public CapacityError {
 public:
  explicit OverflowError(const std::string& what)
      : CapacityError(what, INT64_MAX) {}
};

/// The table is not monotone, or violates phi(empty)=0 / phi(C)=1.
class NotSemicoherentError : public InputError {
 public:
  using InputError::InputError;
};

/// A zeta transform produced a value outside {0,1}.
class NotStructureFunctionError : public InputError {
 public:
  using InputError::InputError;
};

/// A multilinear form whose minimal monomials do not all carry +1.
class InconsistentFormError : public InputError {
 public:
  using InputError::InputError;
};

/// Counts or coefficients that no semicoherent system can produce.
class InconsistentCoefficientsError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace semico
