#pragma once

#include <stdexcept>
#include <string>

namespace isochron {

/// A precondition of an operation was not met by the caller.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain where the quantity is defined
/// (energy at or above the critical energy, x outside the well, ...).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A numerical procedure (root bracket, integrator) failed to converge.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isochron
