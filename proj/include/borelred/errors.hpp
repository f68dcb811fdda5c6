#pragma once

#include <stdexcept>
#include <string>

namespace borelred {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (scalars, JSON payloads).
struct ParseError : Error {
    using Error::Error;
};

/// Mismatched or out-of-range dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A triangularity constraint was violated.
struct ShapeError : Error {
    using Error::Error;
};

/// An upper-triangular matrix with repeated diagonal entries where
/// pairwise-distinct eigenvalues are required.
struct NotRegularSemisimpleError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// A Laurent polynomial has a pole at t = 0.
struct LimitDoesNotExistError : Error {
    using Error::Error;
};

/// A point violates the per-coordinate i/j vanishing required on the
/// diagonalized zero fiber.
struct InvalidFiberPointError : Error {
    using Error::Error;
};

/// An input lies outside the domain of the requested map
/// (e.g. not in the zero fiber, repeated target coordinates).
struct DomainError : Error {
    using Error::Error;
};

/// Requested dimension exceeds a configured bound.
struct SizeError : Error {
    using Error::Error;
};

/// A postcondition that is guaranteed by construction failed; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace borelred
