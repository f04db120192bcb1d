#pragma once

#include <stdexcept>
#include <string>

namespace qh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inversion of a non-invertible ring element (zero, or a genuine h-series).
struct NotInvertible : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// Numeric evaluation hit a zero of the denominator.
struct EvaluationPole : Error {
  using Error::Error;
};

// Matrix dimensions incompatible with the requested operation.
struct ShapeError : Error {
  using Error::Error;
};

struct NotUnipotent : Error {
  using Error::Error;
};

struct NotNilpotent : Error {
  using Error::Error;
};

// A representation or composite generator failed its defining relations.
struct ConstructionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qh
