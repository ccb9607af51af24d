#pragma once

#include <stdexcept>
#include <string>

namespace gds {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad vertex ids, improper colorings,
/// unparsable files, a pre-coloring that disagrees with its target).
class InputError : public Error {
public:
    using Error::Error;
};

/// A set family containing an empty member cannot be hit.
class InfeasibleError : public InputError {
public:
    using InputError::InputError;
};

/// An exact solver refused an instance above its size guard.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace gds
