#pragma once

#include <stdexcept>
#include <string>

namespace hb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid input data (point on the unit circle, non-unimodular gamma, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Exterior evaluation requested at (or too close to) a reflected zero 1/conj(a).
struct PoleAtReflectedZero : Error {
    using Error::Error;
};

/// An adaptive quadrature or node-doubling loop failed to meet its tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// Model-space construction rejects repeated zeros.
struct RepeatedZeros : Error {
    using Error::Error;
};

/// Resolvent solve failed; signals a broken finite-dimensional representation.
struct SingularResolvent : Error {
    using Error::Error;
};

/// A quantity that must be real came back with a large imaginary residue.
struct NotRealResult : Error {
    using Error::Error;
};

/// Toeplitz symbol outside the closed-form set supported in v1.
struct UnsupportedSymbol : Error {
    using Error::Error;
};

/// Spec file parsing / validation failure, with field context in the message.
struct ParseError : Error {
    using Error::Error;
};

/// Two decidable verdict channels disagree. This is the central alarm.
struct ConsistencyViolation : Error {
    using Error::Error;
};

}  // namespace hb
