#pragma once

#include <stdexcept>
#include <string>

namespace sumrules {

// Base class for every failure this library reports on purpose.  Callers that
// want blanket handling catch Error; the concrete types below exist so tests
// and the CLI can tell a usage mistake from a violated precondition.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A string failed to parse as a rational, a spectrum file, or a CLI value.
struct ParseError : Error {
  using Error::Error;
};

// An operation that needs nonempty input got an empty list.
struct EmptyInput : Error {
  using Error::Error;
};

// The spectrum does not cover enough eigenvalues for the requested index.
struct InsufficientLevels : Error {
  using Error::Error;
};

// A closed form that must produce an integer evaluated to a non-integer.
// This always indicates a bug or an unsupported parameter combination, never
// a rounding artifact: all arithmetic here is exact.
struct InternalNonInteger : Error {
  using Error::Error;
};

// A parameter is outside the domain a formula is valid on (wrong dimension
// parity, oscillator exponent not of the admissible form, and so on).
struct UnsupportedParameter : Error {
  using Error::Error;
};

// An ingested eigenvalue is negative.
struct NegativeEigenvalue : Error {
  using Error::Error;
};

// The index N does not sit at a spectral gap (lambda_N == lambda_{N+1}), so a
// gap-interval check is not well posed there.
struct NotAGapIndex : Error {
  using Error::Error;
};

// The counting recurrence hit a step whose denominator is not positive.
struct GrowthConditionViolated : Error {
  explicit GrowthConditionViolated(int step_index, const std::string& what)
      : Error(what), step(step_index) {}
  int step;
};

// A lattice direction argument that must be nonzero was (0, 0).
struct ZeroVector : Error {
  using Error::Error;
};

// No dual lattice vector realizes the requested eigenvalue.
struct EmptyEigenspace : Error {
  using Error::Error;
};

// The enumeration cutoff is too small to classify every coupled mode.
struct InsufficientCutoff : Error {
  using Error::Error;
};

}  // namespace sumrules
