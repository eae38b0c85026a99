#pragma once

#include <stdexcept>
#include <string>

namespace qgspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied parameters that violate a precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A computed result contradicts a bound the model guarantees, e.g. more
/// negative bands than vertex-coupling eigenvalues allow.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Band structure does not cover the requested energy cutoff.
class InsufficientScan : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// No closed form exists for the requested lattice.
class Unsupported : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

} // namespace qgspec
