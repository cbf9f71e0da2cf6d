#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivis/observable.hpp"
#include "quivis/state.hpp"

namespace quivis {

/// Ordered sequence of named moments connected by unitary steps.
/// Step j evolves moment j into moment j+1 (Schrödinger picture; the
/// operator is understood to act at the earlier moment of its interval).
class Timeline {
  public:
    Timeline(std::vector<std::string> moments, std::vector<Matrix> steps,
             const Tolerances& tol = {});

    int dim() const { return static_cast<int>(steps_.empty() ? 0 : steps_.front().rows()); }
    const std::vector<std::string>& moments() const { return moments_; }
    const std::vector<Matrix>& steps() const { return steps_; }
    const std::string& initial_moment() const { return moments_.front(); }
    const std::string& final_moment() const { return moments_.back(); }

    /// Index of a named moment. Throws UnknownMoment.
    int index_of(const std::string& moment) const;

    /// Product of the step unitaries from `from` to `to`; identity when
    /// the moments coincide. Throws UnknownMoment, BackwardInterval.
    Matrix evolve_between(const std::string& from, const std::string& to) const;

  private:
    std::vector<std::string> moments_;
    std::vector<Matrix> steps_;
};

/// A candidate observable attached to a moment of an experiment.
///
/// `meaningful` is user-declared metadata (whether the observable has a
/// physical meaning); it is reported verbatim, never inferred.
///
/// `measured_partition`/`measured_values`, when present, classify this
/// candidate against the corresponding coarsening of the measured
/// observable instead of the measured observable itself.
struct Candidate {
    std::string name;
    std::string moment;
    SpectralObservable observable;
    bool meaningful = true;
    std::optional<std::vector<std::vector<int>>> measured_partition;
    std::optional<std::vector<double>> measured_values;
};

/// A quantum experiment: an initial state at the first moment, a unitary
/// timeline, the observable measured at the final moment, and candidate
/// observables to be classified.
class Experiment {
  public:
    Experiment(DensityOperator initial, Timeline timeline, SpectralObservable measured,
               std::vector<Candidate> candidates = {}, const Tolerances& tol = {});

    int dim() const { return initial_.dim(); }
    const DensityOperator& initial() const { return initial_; }
    const Timeline& timeline() const { return timeline_; }
    const SpectralObservable& measured() const { return measured_; }
    const std::vector<Candidate>& candidates() const { return candidates_; }
    const Tolerances& tolerances() const { return tol_; }

    /// Candidate by name. Throws Error when absent.
    const Candidate& candidate(const std::string& name) const;

    /// The measured observable this candidate is classified against
    /// (the declared coarsening of `measured()`, or `measured()` itself).
    SpectralObservable effective_measured(const Candidate& c) const;

    /// ρ(t) at a named moment.
    DensityOperator state_at(const std::string& moment) const;

    /// Same experiment with a different initial state.
    Experiment with_initial(DensityOperator initial) const;

  private:
    DensityOperator initial_;
    Timeline timeline_;
    SpectralObservable measured_;
    std::vector<Candidate> candidates_;
    Tolerances tol_;
};

/// Born-rule probabilities p_n = tr(P_n ρ), clamped to [0,1] when within
/// prob_tol of the boundary. Throws DimensionMismatch.
std::vector<double> born_probabilities(const SpectralObservable& a, const DensityOperator& rho,
                                       const Tolerances& tol = {});

/// The retrospective observable: projectors U† P_n U (back-evolution under
/// the tail unitary), eigenvalues kept verbatim. Throws NotUnitary.
SpectralObservable retrospect(const SpectralObservable& a, const Matrix& u,
                              const Tolerances& tol = {});

/// The forward-evolved observable: projectors U Q_k U†.
SpectralObservable forward_evolve_observable(const SpectralObservable& b, const Matrix& u,
                                             const Tolerances& tol = {});

/// True iff tr(Qρ) = 1 within prob_tol, i.e. the eigen-event Q occurs in ρ
/// with certainty. Throws NotProjector.
bool has_definite_value(const DensityOperator& rho, const Matrix& q, const Tolerances& tol = {});

} // namespace quivis
