#pragma once

#include <stdexcept>
#include <string>

namespace fracdamp {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ValidationIssue {
    NonPositiveLambda,
    NonPositiveOmega,
    NuOutOfRange,
};

/// Rejected oscillator parameters; issue() names the offending field.
class ValidationError : public Error {
public:
    ValidationError(ValidationIssue issue, const std::string& message)
        : Error(message), issue_(issue) {}
    ValidationIssue issue() const noexcept { return issue_; }

private:
    ValidationIssue issue_;
};

/// Malformed textual input (key=value or CSV).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Base class for runtime numerical failures.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// No sign change found for the angular equation after endpoint expansion.
/// Signals numerical breakdown; never expected for valid parameters.
class BracketFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// |2s + nu*lambda*s^(nu-1)| below threshold at a pole, i.e. a repeated
/// root, which cannot happen for 0 < nu < 1; treated as an internal error.
class DegenerateDenominator : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Adaptive quadrature hit its subdivision limit with the error estimate
/// still above tolerance.
class QuadratureNonConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Time-stepper was asked for more steps than its configured memory cap.
class MemoryCapExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace fracdamp
