#pragma once

#include <stdexcept>
#include <string>

namespace opmetric {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The caller handed us something malformed: bad shapes, values outside the
// documented domain, unparsable files. Maps to CLI exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

// A computation left the numerically trustworthy regime even though the
// inputs were well-formed. Maps to CLI exit code 2.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatch : public InputError {
public:
    using InputError::InputError;
};

class NonFiniteEntry : public InputError {
public:
    using InputError::InputError;
};

class OutsideDisc : public InputError {
public:
    using InputError::InputError;
};

class NotHermitian : public InputError {
public:
    using InputError::InputError;
};

class SpectrumOutOfDomain : public InputError {
public:
    using InputError::InputError;
};

class DegenerateConfiguration : public InputError {
public:
    using InputError::InputError;
};

// A resolvent factor (I + A*W or a right distance factor) is numerically
// singular, or an atanh argument reached 1. Near-boundary points are the
// usual culprit.
class SingularResolvent : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// A matrix that must stay strictly inside the unit ball came out with
// operator norm above 1 - 1e-8.
class NormTooCloseToOne : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Recovery of the (A, U, V) normal form of a composed ball automorphism did
// not reproduce the composition within tolerance.
class NormalFormFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace opmetric
