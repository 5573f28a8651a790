#pragma once

#include <stdexcept>
#include <string>

namespace hartmann {

/// Base class for all solver failures.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite or structurally malformed input.
struct InvalidInput : SolverError {
    using SolverError::SolverError;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : SolverError {
    using SolverError::SolverError;
};

/// Iterative scheme exhausted its budget; carries the best estimate reached.
struct ConvergenceError : SolverError {
    ConvergenceError(const std::string& msg, double best)
        : SolverError(msg), best_estimate(best) {}
    double best_estimate;
};

/// Requested energy lies outside the bound-state window |E| < Mc^2.
struct NotBound : SolverError {
    using SolverError::SolverError;
};

/// Centrifugal coefficient below the critical value -1/4.
struct FallToCenter : SolverError {
    using SolverError::SolverError;
};

/// Square-root arguments of the angular exponents are negative.
struct ComplexExponents : SolverError {
    using SolverError::SolverError;
};

/// The energy condition has no sign change: no bound state for these quantum numbers.
struct NoBracket : SolverError {
    using SolverError::SolverError;
};

/// No computed eigenvector has the requested number of interior nodes.
struct NodeCountMismatch : SolverError {
    using SolverError::SolverError;
};

/// Constant adjudication could not separate the candidates by a safe margin.
struct AdjudicationAmbiguous : SolverError {
    using SolverError::SolverError;
};

/// Finite-difference convergence check failed on the requested sampling grid.
struct GridTooCoarse : SolverError {
    using SolverError::SolverError;
};

/// Malformed or unreadable configuration file.
struct ConfigError : SolverError {
    using SolverError::SolverError;
};

} // namespace hartmann
