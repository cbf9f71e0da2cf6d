#pragma once

#include <vector>

#include "quivis/experiment.hpp"

namespace quivis {

/// The coherence-deprived ("butchered") decomposition of a state with
/// respect to an observable: Σ_k p_k · Q_k ρ Q_k / p_k.
///
/// `weights` holds p_k = tr(Q_k ρ) for every eigen-event of the source
/// observable; `terms` holds a constituent only for weights above
/// prob_tol (a vanishing weight makes the whole term zero, its
/// constituent undefined). Weights are never renormalized.
struct ButcheredMixture {
    struct Term {
        int index; // eigen-event index into the source observable
        double weight;
        DensityOperator state;
    };

    std::vector<double> weights;
    std::vector<Term> terms;
    SpectralObservable source;
};

/// Butchers ρ with respect to B. Throws DimensionMismatch.
ButcheredMixture butcher(const DensityOperator& rho, const SpectralObservable& b,
                         const Tolerances& tol = {});

/// Σ_k p_k ρ_k. The omitted below-tolerance terms make the result's trace
/// fall short of 1 by at most prob_tol.
DensityOperator recombine(const ButcheredMixture& m, const Tolerances& tol = {});

/// Definition of relative coherence: true iff some cross-block
/// Q_k ρ Q_k′ (k ≠ k′) is nonzero within atol_matrix.
bool is_coherent(const DensityOperator& rho, const SpectralObservable& b,
                 const Tolerances& tol = {});

} // namespace quivis
