#pragma once

#include <stdexcept>
#include <string>

namespace eqc {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (bad tables, failed preconditions).
struct InvalidInput : Error {
    using Error::Error;
};

/// A value expected to lie in Q was not rational.
struct NotRational : Error {
    using Error::Error;
};

/// An Euler pairing evaluated to a non-integral rational.
struct NonIntegralEuler : Error {
    using Error::Error;
};

/// A character expected to have a single central weight mixes weights.
struct NoPureWeight : Error {
    using Error::Error;
};

/// Weight tags in one Hom computation contradict each other.
struct InconsistentWeights : Error {
    using Error::Error;
};

/// Generator closure exceeded the configured order cap.
struct OrderCapExceeded : Error {
    using Error::Error;
};

/// A requested value is not determined by the data on hand.
struct UnknownValue : Error {
    using Error::Error;
};

}  // namespace eqc
