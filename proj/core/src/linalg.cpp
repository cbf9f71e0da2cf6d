#include "quivis/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace quivis {

bool is_finite(const Matrix& m) {
    return m.allFinite();
}

bool is_hermitian(const Matrix& m, double atol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).norm() <= atol;
}

bool is_unitary(const Matrix& u, double atol) {
    if (u.rows() != u.cols()) return false;
    Matrix gram = u.adjoint() * u;
    gram -= Matrix::Identity(u.rows(), u.cols());
    return gram.norm() <= atol;
}

bool validate_projector(const Matrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) return false;
    if (!m.allFinite()) return false;
    if ((m - m.adjoint()).norm() > tol.atol_matrix) return false;
    return (m * m - m).norm() <= tol.atol_matrix;
}

double commutator_norm(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) {
        throw DimensionMismatch("commutator_norm: operands must be square matrices of equal dimension");
    }
    return (x * y - y * x).norm();
}

std::vector<SpectralCluster> spectral_clusters(const Matrix& h, const Tolerances& tol) {
    if (h.rows() != h.cols()) {
        throw NotHermitian("spectral_clusters: matrix is not square");
    }
    if (!is_hermitian(h, tol.atol_matrix)) {
        throw NotHermitian("spectral_clusters: matrix is not Hermitian within atol_matrix");
    }

    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("spectral_clusters: eigensolver failed to converge");
    }
    const auto& values = solver.eigenvalues(); // ascending
    const auto& vectors = solver.eigenvectors();
    const Eigen::Index dim = h.rows();

    std::vector<SpectralCluster> clusters;
    Eigen::Index begin = 0;
    for (Eigen::Index i = 1; i <= dim; ++i) {
        const bool split = (i == dim) || (values(i) - values(i - 1) > tol.eig_group_tol);
        if (!split) continue;
        Matrix projector = Matrix::Zero(dim, dim);
        double sum = 0.0;
        for (Eigen::Index j = begin; j < i; ++j) {
            projector.noalias() += vectors.col(j) * vectors.col(j).adjoint();
            sum += values(j);
        }
        clusters.push_back({sum / static_cast<double>(i - begin), std::move(projector)});
        begin = i;
    }
    return clusters;
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity so the distribution is exactly Haar.
    for (int c = 0; c < dim; ++c) {
        Complex d = r(c, c);
        double mag = std::abs(d);
        q.col(c) *= (mag > 0) ? d / mag : Complex(1, 0);
    }
    return q;
}

Matrix random_density_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

Vector random_ket(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Complex(gauss(rng), gauss(rng));
    }
    v.normalize();
    return v;
}

} // namespace quivis
