#pragma once

#include <stdexcept>
#include <string>

namespace recsizer {

/// Base class for all recoverable library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument is outside the mathematical domain of an operation
/// (negative irradiance, negative charge power, negative discount rate, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two series that must share length/alignment do not.
class SeriesMismatchError : public Error {
public:
    using Error::Error;
};

/// A fleet size exceeds its configured unit cap.
class CapacityExceededError : public Error {
public:
    using Error::Error;
};

/// Total demand is zero where a demand-proportional share is required.
class DegenerateDemandError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input (dimension mismatch, missing pieces).
class StructureError : public Error {
public:
    using Error::Error;
};

/// Numerical breakdown inside a solver, with condition diagnostics in the message.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an object in the wrong state.
class StateError : public Error {
public:
    using Error::Error;
};

/// Input data covers too short a span for the requested operation.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked to enumerate beyond its stated limits.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

/// Malformed file content (CSV, TOML, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace recsizer
