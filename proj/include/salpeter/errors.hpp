#pragma once

#include <stdexcept>
#include <string>

namespace salpeter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad parameters or scenario input (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

/// Mismatched array lengths or grids between operands.
struct ShapeError : ConfigError {
    using ConfigError::ConfigError;
};

/// Operation not defined for the given variant.
struct UnsupportedError : ConfigError {
    using ConfigError::ConfigError;
};

/// Malformed call arguments (empty series, index out of range).
struct ArgumentError : ConfigError {
    using ConfigError::ConfigError;
};

/// Numerical failure: solver breakdown, pole collision, vanishing
/// denominators (CLI exit code 3).
struct NumericalError : Error {
    using Error::Error;
};

struct SingularityError : NumericalError {
    using NumericalError::NumericalError;
};

struct UndefinedObservableError : NumericalError {
    using NumericalError::NumericalError;
};

/// Filesystem or serialization failure (CLI exit code 4).
struct IoError : Error {
    using Error::Error;
};

} // namespace salpeter
