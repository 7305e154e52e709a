#pragma once

#include <stdexcept>
#include <string>

namespace becgrav {

// Input outside the physical or mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature / integrator / consistency failures.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Drive frequency does not hit a mode resonance.
class ResonanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bad or incomplete configuration (unknown key, missing unit, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A plan that cannot meet its constraints.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace becgrav
