#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix dimensions that are unsupported or inconsistent with each other.
class DimensionError : public Error {
public:
    using Error::Error;
};

class NotHermitianError : public Error {
public:
    using Error::Error;
};

// A matrix that fails the density-matrix invariants, or parameters outside
// their physical domain.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

// Iterative numerics (quadrature refinement, eigensolver sweeps) that did
// not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace qcorr
