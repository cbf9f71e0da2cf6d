#include "quivis/state.hpp"

#include <cmath>
#include <utility>

namespace quivis {

DensityOperator::DensityOperator(Matrix rho, const Tolerances& tol) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) {
        throw DimensionMismatch("DensityOperator: matrix must be square");
    }
    if (!rho_.allFinite()) {
        throw Error("DensityOperator: entries must be finite");
    }
    if (!is_hermitian(rho_, tol.atol_matrix)) {
        throw NotHermitian("DensityOperator: matrix is not Hermitian within atol_matrix");
    }
    if (std::abs(rho_.trace().real() - 1.0) > tol.prob_tol || std::abs(rho_.trace().imag()) > tol.prob_tol) {
        throw Error("DensityOperator: trace must equal 1 within prob_tol");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < -tol.atol_matrix) {
        throw Error("DensityOperator: matrix is not positive semidefinite");
    }
}

DensityOperator DensityOperator::pure(const Vector& ket, const Tolerances& tol) {
    double norm = ket.norm();
    if (norm <= 0) throw Error("DensityOperator::pure: zero ket");
    Vector unit = ket / norm;
    return DensityOperator(unit * unit.adjoint(), tol);
}

DensityOperator DensityOperator::evolved(const Matrix& u, const Tolerances& tol) const {
    if (u.rows() != dim() || u.cols() != dim()) {
        throw DimensionMismatch("evolve_state: unitary dimension mismatch");
    }
    if (!is_unitary(u, tol.atol_matrix)) {
        throw NotUnitary("evolve_state: operator is not unitary within atol_matrix");
    }
    return DensityOperator(u * rho_ * u.adjoint(), tol);
}

DensityOperator evolve_state(const DensityOperator& rho, const Matrix& u, const Tolerances& tol) {
    return rho.evolved(u, tol);
}

} // namespace quivis
