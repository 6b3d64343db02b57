#pragma once

#include <stdexcept>
#include <string>

namespace xygp {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a precondition (shape, Hermiticity, parameter range).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Query made at the r = 1 level crossing, where the ground state is doubly degenerate.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Instantaneous gap of the interpolating Hamiltonian fell below the adiabatic floor.
class GapClosureError : public Error {
public:
    using Error::Error;
};

/// Phase requested from a signal whose magnitude vanishes.
class UndefinedPhaseError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message carries the offending row.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace xygp
