#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivis/linalg.hpp"

namespace quivis {

/// An observable in spectral form: pairwise-distinct eigenvalues with
/// orthogonal eigen-projectors that sum to the identity.
///
/// The projectors are the semantically relevant part; eigenvalues are
/// outcome tags. Projectors may have any rank >= 1 (a degenerate, i.e.
/// incomplete, observable has higher-rank eigen-projectors).
class SpectralObservable {
  public:
    /// Validates the spectral form (throws NotProjector, DimensionMismatch,
    /// DuplicateValues, or Error on a completeness failure).
    SpectralObservable(std::vector<double> eigenvalues, std::vector<Matrix> projectors,
                       std::vector<std::string> labels = {}, const Tolerances& tol = {});

    /// Spectral decomposition of a Hermitian matrix, eigenvalues ascending,
    /// degenerate eigenvalues merged per tol.eig_group_tol.
    static SpectralObservable decompose(const Matrix& hermitian, const Tolerances& tol = {},
                                        std::vector<std::string> labels = {});

    /// The observable with exactly one eigen-event (the identity).
    static SpectralObservable trivial(int dim, double eigenvalue = 0.0);

    int dim() const { return static_cast<int>(projectors_.front().rows()); }
    int size() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<Matrix>& projectors() const { return projectors_; }
    const Matrix& projector(int k) const { return projectors_.at(static_cast<size_t>(k)); }
    double eigenvalue(int k) const { return eigenvalues_.at(static_cast<size_t>(k)); }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of eigen-event k, or a generated "Q_k"-style fallback.
    std::string label(int k) const;

    /// Σ_n a_n P_n.
    Matrix matrix() const;

    /// Conjugates every projector by the given unitary (Q ↦ U Q U†),
    /// keeping eigenvalues and labels. Throws NotUnitary/DimensionMismatch.
    SpectralObservable conjugated(const Matrix& u, const Tolerances& tol = {}) const;

    /// Merges eigen-events into sums over the given index groups.
    ///
    /// `partition` must cover every index exactly once; `new_values` gives
    /// one distinct eigenvalue per group. Throws InvalidPartition or
    /// DuplicateValues.
    SpectralObservable coarsen(const std::vector<std::vector<int>>& partition,
                               const std::vector<double>& new_values,
                               const Tolerances& tol = {}) const;

  private:
    std::vector<double> eigenvalues_;
    std::vector<Matrix> projectors_;
    std::vector<std::string> labels_;
};

/// Matches two projector families pairwise within tol.atol_matrix.
/// Returns the bijection as map[k] = index into `b`, or nullopt when no
/// bijection exists. This is the "equal up to eigenvalues" predicate.
std::optional<std::vector<int>> projector_bijection(const SpectralObservable& a,
                                                    const SpectralObservable& b,
                                                    const Tolerances& tol = {});

} // namespace quivis
