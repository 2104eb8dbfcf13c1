#pragma once

#include <stdexcept>
#include <string>

namespace sgps {

/// Base class of all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or unsupported construction/config input (CLI exit code 2).
struct SpecError : Error {
    using Error::Error;
};

/// A supplied table violates a ring axiom; the message names the first
/// failed law and a witness triple.
struct AxiomError : Error {
    using Error::Error;
};

/// An enumeration exceeded a configured cap or pair budget (CLI exit code 3).
struct CapacityError : Error {
    using Error::Error;
};

/// Two independent computations of the same object disagreed. This never
/// reflects bad input; it signals a bug in the core.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace sgps
