#include "quivis/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace quivis {

Timeline::Timeline(std::vector<std::string> moments, std::vector<Matrix> steps,
                   const Tolerances& tol)
    : moments_(std::move(moments)), steps_(std::move(steps)) {
    if (steps_.empty()) {
        throw Error("Timeline: need at least one step");
    }
    if (moments_.size() != steps_.size() + 1) {
        throw Error("Timeline: moment count must equal step count + 1");
    }
    std::set<std::string> unique(moments_.begin(), moments_.end());
    if (unique.size() != moments_.size()) {
        throw Error("Timeline: moment names must be unique");
    }
    const Eigen::Index dim = steps_.front().rows();
    for (size_t j = 0; j < steps_.size(); ++j) {
        const Matrix& u = steps_[j];
        if (u.rows() != dim || u.cols() != dim) {
            throw DimensionMismatch("Timeline: step " + std::to_string(j) +
                                    " has mismatched dimension");
        }
        if (!is_unitary(u, tol.atol_matrix)) {
            throw NotUnitary("Timeline: step " + std::to_string(j) + " is not unitary");
        }
    }
}

int Timeline::index_of(const std::string& moment) const {
    auto it = std::find(moments_.begin(), moments_.end(), moment);
    if (it == moments_.end()) {
        throw UnknownMoment("Timeline: unknown moment '" + moment + "'");
    }
    return static_cast<int>(it - moments_.begin());
}

Matrix Timeline::evolve_between(const std::string& from, const std::string& to) const {
    const int a = index_of(from);
    const int b = index_of(to);
    if (b < a) {
        throw BackwardInterval("Timeline: moment '" + to + "' precedes '" + from + "'");
    }
    Matrix u = Matrix::Identity(dim(), dim());
    for (int j = a; j < b; ++j) {
        u = steps_[static_cast<size_t>(j)] * u;
    }
    return u;
}

Experiment::Experiment(DensityOperator initial, Timeline timeline, SpectralObservable measured,
                       std::vector<Candidate> candidates, const Tolerances& tol)
    : initial_(std::move(initial)),
      timeline_(std::move(timeline)),
      measured_(std::move(measured)),
      candidates_(std::move(candidates)),
      tol_(tol) {
    if (timeline_.dim() != initial_.dim() || measured_.dim() != initial_.dim()) {
        throw DimensionMismatch("Experiment: state, timeline, and measured observable must share "
                                "one dimension");
    }
    std::set<std::string> names;
    for (const Candidate& c : candidates_) {
        if (c.observable.dim() != initial_.dim()) {
            throw DimensionMismatch("Experiment: candidate '" + c.name +
                                    "' has mismatched dimension");
        }
        timeline_.index_of(c.moment); // throws UnknownMoment
        if (!names.insert(c.name).second) {
            throw Error("Experiment: duplicate candidate name '" + c.name + "'");
        }
        if (c.measured_partition.has_value() != c.measured_values.has_value()) {
            throw Error("Experiment: candidate '" + c.name +
                        "' must give a measured partition and values together");
        }
        if (c.measured_partition) {
            effective_measured(c); // validates the coarsening
        }
    }
}

const Candidate& Experiment::candidate(const std::string& name) const {
    for (const Candidate& c : candidates_) {
        if (c.name == name) return c;
    }
    throw Error("Experiment: no candidate named '" + name + "'");
}

SpectralObservable Experiment::effective_measured(const Candidate& c) const {
    if (!c.measured_partition) return measured_;
    return measured_.coarsen(*c.measured_partition, *c.measured_values, tol_);
}

DensityOperator Experiment::state_at(const std::string& moment) const {
    Matrix u = timeline_.evolve_between(timeline_.initial_moment(), moment);
    return initial_.evolved(u, tol_);
}

Experiment Experiment::with_initial(DensityOperator initial) const {
    return Experiment(std::move(initial), timeline_, measured_, candidates_, tol_);
}

std::vector<double> born_probabilities(const SpectralObservable& a, const DensityOperator& rho,
                                       const Tolerances& tol) {
    if (a.dim() != rho.dim()) {
        throw DimensionMismatch("born_probabilities: dimension mismatch");
    }
    std::vector<double> probs;
    probs.reserve(static_cast<size_t>(a.size()));
    for (int n = 0; n < a.size(); ++n) {
        double p = (a.projector(n) * rho.matrix()).trace().real();
        if (p < 0 && p >= -tol.prob_tol) p = 0.0;
        if (p > 1 && p <= 1 + tol.prob_tol) p = 1.0;
        probs.push_back(p);
    }
    return probs;
}

SpectralObservable retrospect(const SpectralObservable& a, const Matrix& u, const Tolerances& tol) {
    return a.conjugated(u.adjoint(), tol);
}

SpectralObservable forward_evolve_observable(const SpectralObservable& b, const Matrix& u,
                                             const Tolerances& tol) {
    return b.conjugated(u, tol);
}

bool has_definite_value(const DensityOperator& rho, const Matrix& q, const Tolerances& tol) {
    if (!validate_projector(q, tol)) {
        throw NotProjector("has_definite_value: operator is not a projector");
    }
    if (q.rows() != rho.dim()) {
        throw DimensionMismatch("has_definite_value: dimension mismatch");
    }
    return std::abs((q * rho.matrix()).trace().real() - 1.0) <= tol.prob_tol;
}

} // namespace quivis
