// spinlight - error types shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace spinlight {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments violate a type invariant or an operation precondition.
struct InvalidInputError : Error {
  using Error::Error;
};

// Inputs are formally valid but lie outside the physical domain of the
// operation (outside the light cylinder, interior of a source, superluminal
// observer, singular effective medium, ...).
struct DomainError : Error {
  using Error::Error;
};

// A numerical procedure failed: scan pinned at a window boundary,
// quadrature did not converge, spectral peak at the Nyquist edge.
struct NumericalError : Error {
  using Error::Error;
};

// Malformed or inconsistent scenario configuration (CLI layer).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace spinlight
