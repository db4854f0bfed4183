#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hookcells {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text was empty where a partition or Hilbert function is required.
struct EmptyInput : Error {
  EmptyInput() : Error("empty input") {}
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

// Partition parts are not positive and non-increasing.
struct InvalidShape : Error {
  using Error::Error;
};

// Sequence is not of the form (1, 2, ..., d, t_d, ..., t_j, 0) with
// d >= t_d >= ... >= t_j > 0.
struct NonUnimodalShape : Error {
  using Error::Error;
};

// Text could not be parsed; position is a 0-based byte offset.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Degree index outside the meaningful range for the given object.
struct DegreeOutOfRange : Error {
  using Error::Error;
};

// Operation requires a nonempty hook-code block.
struct EmptyBlock : Error {
  using Error::Error;
};

// Operation is defined only for single-block diagonal lengths (1,...,d,t).
struct NotSingleBlock : Error {
  using Error::Error;
};

// Hook code does not fit the box sequence of the given diagonal lengths.
struct BoxOverflow : Error {
  using Error::Error;
};

// Coefficient pattern length does not match the requested slot count.
struct ArityMismatch : Error {
  using Error::Error;
};

// Parameter requires a larger ambient degree.
struct DegreeTooSmall : Error {
  using Error::Error;
};

// Modulus is not prime, or too small for the instance at hand.
struct InvalidModulus : Error {
  using Error::Error;
};

// Enumeration would exceed the configured work budget.
struct BudgetExhausted : Error {
  using Error::Error;
};

// Independent verification route disagrees with the formula route.
struct Disagreement : Error {
  using Error::Error;
};

}  // namespace hookcells
