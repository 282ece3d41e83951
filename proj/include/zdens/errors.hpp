#pragma once

#include <stdexcept>
#include <string>

namespace zdens {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical validity region of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Request exceeds a documented capacity limit (table sizes, O(N^2) caps).
struct CapacityError : Error {
    using Error::Error;
};

/// Requested accuracy is unattainable with the given truncation/height.
struct PrecisionError : Error {
    using Error::Error;
};

/// Missing or inconsistent configuration (names the offending keys).
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed textual input; message carries the line number where known.
struct ParseError : Error {
    using Error::Error;
};

/// Root bracketing failed: no sign change at the interval endpoints.
struct BracketError : Error {
    using Error::Error;
};

/// Iteration limit reached before the requested tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

} // namespace zdens
