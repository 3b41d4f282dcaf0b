#pragma once

#include <stdexcept>
#include <string>

namespace multinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Group closure passed the element cap (group infinite or too large).
struct CapExceeded : Error {
  using Error::Error;
};

/// Malformed group definition text.
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed input that does not describe a valid G-lattice.
struct ValidationError : Error {
  using Error::Error;
};

struct UnknownBuiltin : ValidationError {
  using ValidationError::ValidationError;
};

/// A proved statement failed on concrete data: an implementation bug.
struct TheoremViolation : Error {
  using Error::Error;
};

struct NotIsotropy : Error {
  using Error::Error;
};

struct NotInvariant : Error {
  using Error::Error;
};

struct GeneratorMismatch : Error {
  using Error::Error;
};

struct ParityViolation : Error {
  using Error::Error;
};

}  // namespace multinv
