#pragma once

#include <stdexcept>
#include <string>

namespace qclone {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix/vector size other than the supported 2 or 4, or mixed operand dims.
struct InvalidDimensionError : Error {
    using Error::Error;
};

// Parameter outside its admissible range (angles, epsilon, eta, gamma, M, ...).
struct DomainError : Error {
    using Error::Error;
};

// Malformed request shape (bad axis set, malformed range string, ...).
struct UsageError : Error {
    using Error::Error;
};

// Input failed the positive-semidefiniteness floor.
struct NotPsdError : Error {
    using Error::Error;
};

// Iterative routine failed to converge; must not happen for valid inputs.
struct NumericalFailureError : Error {
    using Error::Error;
};

// Parameter point lies outside the rows of a classification table.
struct NotCoveredError : Error {
    using Error::Error;
};

}  // namespace qclone
