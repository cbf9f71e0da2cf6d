#include "quivis/observable.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace quivis {

SpectralObservable::SpectralObservable(std::vector<double> eigenvalues,
                                       std::vector<Matrix> projectors,
                                       std::vector<std::string> labels, const Tolerances& tol)
    : eigenvalues_(std::move(eigenvalues)),
      projectors_(std::move(projectors)),
      labels_(std::move(labels)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size()) {
        throw DimensionMismatch("SpectralObservable: need one eigenvalue per projector");
    }
    if (!labels_.empty() && labels_.size() != projectors_.size()) {
        throw DimensionMismatch("SpectralObservable: need one label per projector when labels are given");
    }
    const Eigen::Index dim = projectors_.front().rows();
    for (size_t k = 0; k < projectors_.size(); ++k) {
        const Matrix& q = projectors_[k];
        if (q.rows() != dim || q.cols() != dim) {
            throw DimensionMismatch("SpectralObservable: projectors must share one dimension");
        }
        if (!validate_projector(q, tol)) {
            throw NotProjector("SpectralObservable: eigen-projector " + std::to_string(k) +
                               " is not an orthogonal projector");
        }
        if (q.trace().real() < 0.5) {
            throw NotProjector("SpectralObservable: eigen-projector " + std::to_string(k) +
                               " has rank zero");
        }
    }
    for (size_t k = 0; k < eigenvalues_.size(); ++k) {
        for (size_t j = k + 1; j < eigenvalues_.size(); ++j) {
            if (eigenvalues_[k] == eigenvalues_[j]) {
                throw DuplicateValues("SpectralObservable: eigenvalues must be pairwise distinct");
            }
            if ((projectors_[k] * projectors_[j]).norm() > tol.atol_matrix) {
                throw NotProjector("SpectralObservable: eigen-projectors " + std::to_string(k) +
                                   " and " + std::to_string(j) + " are not orthogonal");
            }
        }
    }
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& q : projectors_) sum += q;
    sum -= Matrix::Identity(dim, dim);
    if (sum.norm() > tol.atol_matrix) {
        throw Error("SpectralObservable: eigen-projectors do not sum to the identity");
    }
}

SpectralObservable SpectralObservable::decompose(const Matrix& hermitian, const Tolerances& tol,
                                                 std::vector<std::string> labels) {
    auto clusters = spectral_clusters(hermitian, tol);
    std::vector<double> values;
    std::vector<Matrix> projectors;
    values.reserve(clusters.size());
    projectors.reserve(clusters.size());
    for (auto& c : clusters) {
        values.push_back(c.eigenvalue);
        projectors.push_back(std::move(c.projector));
    }
    if (!labels.empty() && labels.size() != values.size()) {
        throw DimensionMismatch("SpectralObservable::decompose: label count does not match the "
                                "number of distinct eigenvalues (" + std::to_string(values.size()) + ")");
    }
    return SpectralObservable(std::move(values), std::move(projectors), std::move(labels), tol);
}

SpectralObservable SpectralObservable::trivial(int dim, double eigenvalue) {
    return SpectralObservable({eigenvalue}, {Matrix::Identity(dim, dim)});
}

std::string SpectralObservable::label(int k) const {
    if (!labels_.empty()) return labels_.at(static_cast<size_t>(k));
    return "Q_" + std::to_string(k);
}

Matrix SpectralObservable::matrix() const {
    Matrix m = Matrix::Zero(dim(), dim());
    for (size_t k = 0; k < projectors_.size(); ++k) {
        m.noalias() += eigenvalues_[k] * projectors_[k];
    }
    return m;
}

SpectralObservable SpectralObservable::conjugated(const Matrix& u, const Tolerances& tol) const {
    if (u.rows() != dim() || u.cols() != dim()) {
        throw DimensionMismatch("SpectralObservable::conjugated: unitary dimension mismatch");
    }
    if (!is_unitary(u, tol.atol_matrix)) {
        throw NotUnitary("SpectralObservable::conjugated: operator is not unitary");
    }
    std::vector<Matrix> conjugated;
    conjugated.reserve(projectors_.size());
    for (const Matrix& q : projectors_) {
        conjugated.push_back(u * q * u.adjoint());
    }
    return SpectralObservable(eigenvalues_, std::move(conjugated), labels_, tol);
}

SpectralObservable SpectralObservable::coarsen(const std::vector<std::vector<int>>& partition,
                                               const std::vector<double>& new_values,
                                               const Tolerances& tol) const {
    if (partition.empty() || partition.size() != new_values.size()) {
        throw InvalidPartition("coarsen: need one new eigenvalue per group");
    }
    std::set<double> distinct(new_values.begin(), new_values.end());
    if (distinct.size() != new_values.size()) {
        throw DuplicateValues("coarsen: new eigenvalues must be pairwise distinct");
    }
    std::vector<int> seen(static_cast<size_t>(size()), 0);
    for (const auto& group : partition) {
        if (group.empty()) throw InvalidPartition("coarsen: empty group");
        for (int k : group) {
            if (k < 0 || k >= size()) {
                throw InvalidPartition("coarsen: index " + std::to_string(k) + " out of range");
            }
            if (seen[static_cast<size_t>(k)]++) {
                throw InvalidPartition("coarsen: index " + std::to_string(k) + " appears twice");
            }
        }
    }
    for (int k = 0; k < size(); ++k) {
        if (!seen[static_cast<size_t>(k)]) {
            throw InvalidPartition("coarsen: index " + std::to_string(k) + " is not covered");
        }
    }

    std::vector<Matrix> projectors;
    std::vector<std::string> labels;
    projectors.reserve(partition.size());
    for (const auto& group : partition) {
        Matrix q = Matrix::Zero(dim(), dim());
        std::string name;
        for (int k : group) {
            q += projector(k);
            if (!name.empty()) name += "+";
            name += label(k);
        }
        projectors.push_back(std::move(q));
        labels.push_back(std::move(name));
    }
    return SpectralObservable(new_values, std::move(projectors), std::move(labels), tol);
}

std::optional<std::vector<int>> projector_bijection(const SpectralObservable& a,
                                                    const SpectralObservable& b,
                                                    const Tolerances& tol) {
    if (a.dim() != b.dim() || a.size() != b.size()) return std::nullopt;
    std::vector<int> match(static_cast<size_t>(a.size()), -1);
    std::vector<bool> used(static_cast<size_t>(b.size()), false);
    for (int k = 0; k < a.size(); ++k) {
        for (int j = 0; j < b.size(); ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if ((a.projector(k) - b.projector(j)).norm() <= tol.atol_matrix) {
                match[static_cast<size_t>(k)] = j;
                used[static_cast<size_t>(j)] = true;
                break;
            }
        }
        if (match[static_cast<size_t>(k)] < 0) return std::nullopt;
    }
    return match;
}

} // namespace quivis
