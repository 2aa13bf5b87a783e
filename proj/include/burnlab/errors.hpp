#pragma once

#include <stdexcept>
#include <string>

namespace burnlab {

// Base class for all errors raised by the library. Subclasses map onto the
// CLI exit codes (see cli.hpp).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid inputs: mismatched carriers, out-of-range parameters, bad values.
struct DomainError : Error {
  using Error::Error;
};

// A configured cap was exceeded (coset limit, closure size, shell size).
struct CapacityError : Error {
  using Error::Error;
};

// A bounded search finished without an answer (e.g. element order > bound).
struct NotFoundError : Error {
  using Error::Error;
};

// Text input rejected; carries 1-based position information.
struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Operation requires a state the value is not in (e.g. incomplete table).
struct StateError : Error {
  using Error::Error;
};

// Evaluation too close to a pole.
struct SingularityError : Error {
  using Error::Error;
};

// Overflow, NaN, or other floating-point failure.
struct NumericError : Error {
  using Error::Error;
};

// A Burnside computation exhausted its caps without a certified answer.
struct UndecidedError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace burnlab
