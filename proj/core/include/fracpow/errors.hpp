#pragma once

#include <stdexcept>
#include <string>

namespace fracpow {

/// A parameter lies outside its mathematical domain (alpha, h, d, r, n, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operand dimensions do not agree.
struct DimensionError : ParameterError {
    using ParameterError::ParameterError;
};

/// A matrix required to be symmetric is not, beyond the load tolerance.
struct SymmetryError : ParameterError {
    using ParameterError::ParameterError;
};

/// A shifted solve failed: factorization breakdown or CG non-convergence.
/// Carries the shift at which the failure occurred.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, double shift)
        : std::runtime_error(what + " (shift s = " + std::to_string(shift) + ")"),
          shift_(shift) {}

    double shift() const { return shift_; }

private:
    double shift_;
};

/// File input/output failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The dense eigendecomposition reference path failed.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fracpow
