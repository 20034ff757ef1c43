#pragma once

#include <stdexcept>

namespace fps {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: UsageError -> 2, DomainError -> 1, IoError -> 3.

// Malformed arguments, mismatched orders, out-of-range indices.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid request (e.g. reversion of a series with zero
// linear coefficient, rational power of a series whose constant term is
// not 1).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An internal invariant failed (e.g. a formula that must produce an
// integer produced a proper fraction). Indicates a bug, never user error.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fps
