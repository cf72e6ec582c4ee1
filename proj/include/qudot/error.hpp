#ifndef QUDOT_ERROR_HPP
#define QUDOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qudot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Qubit count outside the representable range (n < 1).
struct InvalidSizeError : Error {
    using Error::Error;
};

/// Qubit operand outside [1, n].
struct InvalidQubitError : Error {
    using Error::Error;
};

/// Malformed caller input (wrong bitstring length, duplicate indices, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

/// Operation refused because it would exceed a configured size cap.
struct SizeLimitError : Error {
    using Error::Error;
};

/// The net violates a structural invariant (dead-end node, broken norm).
struct CorruptNetError : Error {
    using Error::Error;
};

/// Structurally invalid circuit (control = target, terminal-rule breach).
struct InvalidCircuitError : Error {
    using Error::Error;
};

/// Measurement requested on a net with multiple coherent branches.
struct CoherentStateError : Error {
    using Error::Error;
};

}  // namespace qudot

#endif
