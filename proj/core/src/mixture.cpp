#include "quivis/mixture.hpp"

namespace quivis {

ButcheredMixture butcher(const DensityOperator& rho, const SpectralObservable& b,
                         const Tolerances& tol) {
    if (rho.dim() != b.dim()) {
        throw DimensionMismatch("butcher: dimension mismatch");
    }
    ButcheredMixture m{{}, {}, b};
    m.weights.reserve(static_cast<size_t>(b.size()));
    for (int k = 0; k < b.size(); ++k) {
        const Matrix& q = b.projector(k);
        double p = (q * rho.matrix()).trace().real();
        if (p < 0 && p >= -tol.prob_tol) p = 0.0;
        m.weights.push_back(p);
        if (p > tol.prob_tol) {
            m.terms.push_back({k, p, DensityOperator(q * rho.matrix() * q / p, tol)});
        }
    }
    return m;
}

DensityOperator recombine(const ButcheredMixture& m, const Tolerances& tol) {
    if (m.terms.empty()) {
        throw Error("recombine: mixture has no constituents");
    }
    const int dim = m.terms.front().state.dim();
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& term : m.terms) {
        sum.noalias() += term.weight * term.state.matrix();
    }
    return DensityOperator(sum, tol);
}

bool is_coherent(const DensityOperator& rho, const SpectralObservable& b, const Tolerances& tol) {
    if (rho.dim() != b.dim()) {
        throw DimensionMismatch("is_coherent: dimension mismatch");
    }
    for (int k = 0; k < b.size(); ++k) {
        for (int j = 0; j < b.size(); ++j) {
            if (j == k) continue;
            if ((b.projector(k) * rho.matrix() * b.projector(j)).norm() > tol.atol_matrix) {
                return true;
            }
        }
    }
    return false;
}

} // namespace quivis
