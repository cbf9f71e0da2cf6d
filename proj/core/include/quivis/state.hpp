#pragma once

#include "quivis/linalg.hpp"

namespace quivis {

/// A density operator: Hermitian, unit trace, positive semidefinite
/// (within tolerances). Describes an ensemble and each system in it.
class DensityOperator {
  public:
    /// Validates the matrix (throws NotHermitian, Error).
    explicit DensityOperator(Matrix rho, const Tolerances& tol = {});

    /// Pure state |ψ⟩⟨ψ| from a ket; normalizes when requested.
    static DensityOperator pure(const Vector& ket, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Matrix& matrix() const { return rho_; }

    /// U ρ U†. Throws NotUnitary, DimensionMismatch.
    DensityOperator evolved(const Matrix& u, const Tolerances& tol = {}) const;

  private:
    Matrix rho_;
};

/// U ρ U† — free-function spelling of DensityOperator::evolved.
DensityOperator evolve_state(const DensityOperator& rho, const Matrix& u,
                             const Tolerances& tol = {});

} // namespace quivis
