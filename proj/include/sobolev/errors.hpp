#pragma once

#include <stdexcept>
#include <string>

namespace sobolev {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (negative time, non-finite scalar, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A coordinate index falls outside the range an explicit object is defined on.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Spectrum data violating sup Re q_j < 0 or |q_j| >= 1.
class InvalidSpectrum : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// The shifted spectrum q_j + lambda is not admissible.
class InvalidRescaling : public Error {
public:
    using Error::Error;
};

/// x is not in the domain D(A_n) = X_{n+1} required by an operation.
class NotInDomain : public Error {
public:
    using Error::Error;
};

/// x is not in any X_n with n inside the configured window.
class NotRepresentable : public Error {
public:
    using Error::Error;
};

/// The two independent routes to the same tower norm disagree beyond rounding.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Invalid verification-suite or CLI configuration.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

} // namespace sobolev
