#pragma once

#include <stdexcept>
#include <string>

namespace vimp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct DegenerateFit : Error {
  using Error::Error;
};

struct ZeroCoefficient : Error {
  using Error::Error;
};

// Carries a human-readable location ("row 3, column 2") in the message.
struct ParseError : Error {
  using Error::Error;
};

struct SchemaMismatch : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace vimp
