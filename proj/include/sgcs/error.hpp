#pragma once

#include <stdexcept>
#include <string>

namespace sgcs {

// Base of everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied something outside the mathematical domain: a bad parameter,
// a Gamma pole, a dimension mismatch, or an integral outside its convergence cone.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Valid input, but the numerics could not certify the requested accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

class AccuracyError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class TruncationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace sgcs
