#pragma once
#include <stdexcept>

namespace gaborlab {

/// Matrix/vector dimensions do not match an operation's contract.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input fails the symplectic condition S^T J S = J.
struct NotSymplecticError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Free factorization requested for a matrix whose B block is singular.
struct NotFreeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A method hypothesis is violated (non-integer oversampling, irrational
/// lattice parameter, parity mismatch, ...).
struct HypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed spec string or input file.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical diagnostic exceeded its configured tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gaborlab
