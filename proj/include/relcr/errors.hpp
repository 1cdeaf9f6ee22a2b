#pragma once

#include <stdexcept>
#include <string>

namespace relcr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two subspaces or matrices of incompatible ambient dimension were combined.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed input (bad field, non-square matrix, non-invertible group element ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The Jacobson radical cannot be decided: small characteristic and the
/// brute-force composition series is over budget.
class RadicalUndecided : public Error {
public:
    using Error::Error;
};

class NotStable : public Error {
public:
    using Error::Error;
};

/// A weight vector or conjugator does not describe a cocharacter of H.
class NotInH : public Error {
public:
    using Error::Error;
};

/// A tuple entry lies outside the parabolic of the cocharacter.
class NotInP : public Error {
public:
    using Error::Error;
};

class UnsupportedHSpec : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration would exceed its size bound.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace relcr
