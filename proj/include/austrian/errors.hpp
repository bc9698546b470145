#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace austrian {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bank deposit or part size exceeds what the bank capacity allows.
struct CapacityViolation : Error {
    using Error::Error;
};

/// A cycle report whose states are not actually closed under the step map.
struct NotACycle : Error {
    using Error::Error;
};

/// A periodic word with no maximally-even rotation.
struct NotBalanced : Error {
    using Error::Error;
};

/// Fraction denominator exceeds the bank capacity bound.
struct DenominatorTooLarge : Error {
    using Error::Error;
};

/// Reconstructed total disagrees with the caller-supplied deck size.
struct InconsistentTotal : Error {
    using Error::Error;
};

/// A condition the library guarantees internally failed to hold.
/// Seeing this means a bug in the implementation, not bad input.
struct InternalInconsistency : Error {
    using Error::Error;
};

/// State-graph export would exceed the configured node cap.
struct TooLarge : Error {
    using Error::Error;
};

/// Malformed state literal; `position` is the byte offset of the problem.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// A negative integer where only non-negative values are meaningful.
struct NegativeValue : ParseError {
    using ParseError::ParseError;
};

}  // namespace austrian
