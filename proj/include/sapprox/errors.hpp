#pragma once

#include <stdexcept>
#include <string>

namespace sapprox {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (rationals, JSON documents, claim ids).
struct ParseError : Error {
  using Error::Error;
};

// Input violates a structural invariant (duplicate labels, bad masses, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Two values that must live over the same universe do not.
struct UniverseMismatchError : Error {
  UniverseMismatchError() : Error("universe mismatch") {}
  using Error::Error;
};

// An operation that enumerates a powerset was given a universe that is too
// large for it.
struct SizeCapError : Error {
  using Error::Error;
};

// Exact arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

// Arithmetic that is undefined regardless of range (division by zero).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace sapprox
