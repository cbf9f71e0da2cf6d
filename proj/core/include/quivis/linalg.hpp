#pragma once

#include <complex>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "quivis/errors.hpp"
#include "quivis/tolerances.hpp"

namespace quivis {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// ‖M‖_F
inline double frobenius_norm(const Matrix& m) { return m.norm(); }

bool is_finite(const Matrix& m);

/// ‖M − M†‖_F ≤ atol
bool is_hermitian(const Matrix& m, double atol);

/// ‖U†U − I‖_F ≤ atol (square matrices only)
bool is_unitary(const Matrix& u, double atol);

/// True iff M is Hermitian and idempotent within tol.atol_matrix.
/// Total over square matrices; never throws.
bool validate_projector(const Matrix& m, const Tolerances& tol);

/// ‖XY − YX‖_F. Throws DimensionMismatch.
double commutator_norm(const Matrix& x, const Matrix& y);

/// One cluster of a Hermitian spectrum: a representative eigenvalue and
/// the orthogonal projector onto the span of the clustered eigenvectors.
struct SpectralCluster {
    double eigenvalue;
    Matrix projector;
};

/// Eigendecomposition of a Hermitian matrix with degenerate eigenvalues
/// merged into common projectors.
///
/// Clustering is single-linkage on the ascending eigenvalue list: a new
/// cluster starts wherever the gap to the previous eigenvalue exceeds
/// tol.eig_group_tol. The representative value is the cluster mean, so
/// adjacent representatives are guaranteed to differ by more than the
/// clustering width. Throws NotHermitian.
std::vector<SpectralCluster> spectral_clusters(const Matrix& h, const Tolerances& tol);

/// Haar-distributed random unitary: QR orthonormalization of a matrix of
/// independent standard complex Gaussians, with the phase convention fixed
/// by the sign of R's diagonal.
Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Random density matrix (normalized Ginibre product G·G†/tr).
Matrix random_density_matrix(int dim, std::mt19937_64& rng);

/// Random pure-state ket (Gaussian entries, normalized).
Vector random_ket(int dim, std::mt19937_64& rng);

} // namespace quivis
