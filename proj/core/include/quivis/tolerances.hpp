#pragma once

#include <stdexcept>

namespace quivis {

/// Numerical thresholds used throughout the library.
///
/// Defaults are calibrated for 64-bit floating point on problems of
/// dimension <= 64. All comparisons against "exact" algebraic statements
/// (projector idempotence, completeness, commutation, certainty of an
/// outcome) go through these knobs; nothing else in the library hides a
/// tolerance.
struct Tolerances {
    /// Frobenius-norm threshold for "this matrix equals zero".
    double atol_matrix = 1e-9;
    /// Maximum gap between eigenvalues merged into one spectral cluster.
    double eig_group_tol = 1e-8;
    /// Threshold for probability comparisons.
    double prob_tol = 1e-9;
    /// Minimum interference gap for a witness to count as demonstrable;
    /// below it the witness is still returned but flagged marginal.
    double witness_tol = 1e-6;

    void validate() const {
        if (atol_matrix <= 0 || eig_group_tol <= 0 || prob_tol <= 0 || witness_tol <= 0) {
            throw std::invalid_argument("Tolerances: all thresholds must be strictly positive");
        }
    }
};

} // namespace quivis
