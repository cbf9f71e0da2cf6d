#include "quivis/classify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace quivis {

namespace {

std::vector<double> butchered_final_probabilities(const DensityOperator& rho_t,
                                                  const SpectralObservable& b,
                                                  const Matrix& u_tail,
                                                  const SpectralObservable& a,
                                                  const Tolerances& tol) {
    DensityOperator mixed = recombine(butcher(rho_t, b, tol), tol);
    return born_probabilities(a, mixed.evolved(u_tail, tol), tol);
}

} // namespace

double verify_blindness(const DensityOperator& rho_t, const SpectralObservable& b,
                        const Matrix& u_tail, const SpectralObservable& a,
                        const Tolerances& tol) {
    if (rho_t.dim() != b.dim() || rho_t.dim() != a.dim()) {
        throw DimensionMismatch("verify_blindness: dimension mismatch");
    }
    std::vector<double> raw = born_probabilities(a, rho_t.evolved(u_tail, tol), tol);
    std::vector<double> mixed = butchered_final_probabilities(rho_t, b, u_tail, a, tol);
    double deviation = 0.0;
    for (size_t n = 0; n < raw.size(); ++n) {
        deviation = std::max(deviation, std::abs(raw[n] - mixed[n]));
    }
    return deviation;
}

bool exhibits_interference(const DensityOperator& rho_t, const SpectralObservable& b,
                           const Matrix& u_tail, const SpectralObservable& a,
                           const Tolerances& tol) {
    return verify_blindness(rho_t, b, u_tail, a, tol) > tol.prob_tol;
}

std::optional<WhichResultCertificate> simplest_certificate(const SpectralObservable& b,
                                                     const std::string& moment,
                                                     const Experiment& exp,
                                                     const SpectralObservable& measured) {
    const Tolerances& tol = exp.tolerances();
    const Matrix u_tail = exp.timeline().evolve_between(moment, exp.timeline().final_moment());

    std::vector<int> map(static_cast<size_t>(b.size()), -1);
    std::vector<bool> hit(static_cast<size_t>(measured.size()), false);
    for (int k = 0; k < b.size(); ++k) {
        const Matrix s_k = u_tail * b.projector(k) * u_tail.adjoint();
        for (int n = 0; n < measured.size(); ++n) {
            if ((measured.projector(n) * s_k - s_k).norm() <= tol.atol_matrix) {
                map[static_cast<size_t>(k)] = n;
                break; // containment in two orthogonal ranges is impossible
            }
        }
        const int n = map[static_cast<size_t>(k)];
        if (n < 0) return std::nullopt;                       // Q_k certain of no single outcome
        if (hit[static_cast<size_t>(n)]) return std::nullopt; // not injective
        hit[static_cast<size_t>(n)] = true;
    }
    if (b.size() != measured.size()) return std::nullopt; // not onto

    // The bijection forces equality: B must BE the retrospected measured
    // observable. Assert it rather than assume it.
    for (int k = 0; k < b.size(); ++k) {
        const Matrix retro =
            u_tail.adjoint() * measured.projector(map[static_cast<size_t>(k)]) * u_tail;
        if ((retro - b.projector(k)).norm() > tol.atol_matrix) return std::nullopt;
    }

    WhichResultCertificate cert;
    cert.bijection = std::move(map);
    cert.simplest = true;
    cert.moment = moment;
    return cert;
}

std::optional<InterferenceWitness> construct_witness(const SpectralObservable& b,
                                                     const std::string& moment,
                                                     const Experiment& exp,
                                                     const SpectralObservable& measured) {
    const Tolerances& tol = exp.tolerances();
    const Timeline& timeline = exp.timeline();
    const Matrix u_tail = timeline.evolve_between(moment, timeline.final_moment());
    const SpectralObservable b_final = forward_evolve_observable(b, u_tail, tol);

    // Largest cross-block, ties broken by lexicographic (k, n, k′).
    double best = 0.0;
    int best_k = -1, best_n = -1, best_kp = -1;
    Matrix best_block;
    for (int k = 0; k < b_final.size(); ++k) {
        for (int n = 0; n < measured.size(); ++n) {
            for (int kp = 0; kp < b_final.size(); ++kp) {
                if (kp == k) continue;
                Matrix block =
                    b_final.projector(k) * measured.projector(n) * b_final.projector(kp);
                double norm = block.norm();
                if (norm > best + tol.atol_matrix * 0.5) {
                    best = norm;
                    best_k = k;
                    best_n = n;
                    best_kp = kp;
                    best_block = std::move(block);
                }
            }
        }
    }
    if (best <= tol.atol_matrix) return std::nullopt; // all cross-blocks vanish

    // Leading singular pair of Q_k^f P_n Q_k′^f: left vector lies in the
    // range of Q_k^f, right vector in the range of Q_k′^f, and
    // ⟨l_k|P_n|l_k′⟩ equals the leading singular value.
    Eigen::JacobiSVD<Matrix> svd(best_block, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Vector l_k = svd.matrixU().col(0);
    Vector l_kp = svd.matrixV().col(0);

    const Complex cross = (l_k.adjoint() * measured.projector(best_n) * l_kp)(0, 0);
    const double gap = std::abs(cross);
    // Rotate β so the interference term αβ*⟨l_k′|P_n|l_k⟩ + βα*⟨l_k|P_n|l_k′⟩
    // becomes real and equal to |⟨l_k|P_n|l_k′⟩|.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex alpha(inv_sqrt2, 0.0);
    const Complex beta = std::polar(inv_sqrt2, -std::arg(cross));

    const Matrix u_full = timeline.evolve_between(timeline.initial_moment(),
                                                  timeline.final_moment());
    Vector psi_final = alpha * l_k + beta * l_kp;
    Vector psi_initial = u_full.adjoint() * psi_final;

    InterferenceWitness w{best_k,
                          best_kp,
                          best_n,
                          std::move(l_k),
                          std::move(l_kp),
                          alpha,
                          beta,
                          DensityOperator::pure(psi_initial, tol),
                          gap,
                          gap < tol.witness_tol};

    // Re-simulate: the witness must reproduce its own prediction.
    DensityOperator rho_t = exp.with_initial(w.initial_state).state_at(moment);
    std::vector<double> raw = born_probabilities(measured, rho_t.evolved(u_tail, tol), tol);
    std::vector<double> mixed = butchered_final_probabilities(rho_t, b, u_tail, measured, tol);
    const double resimulated = raw[static_cast<size_t>(best_n)] - mixed[static_cast<size_t>(best_n)];
    if (std::abs(resimulated - gap) > tol.prob_tol) {
        throw Error("construct_witness: re-simulated gap " + std::to_string(resimulated) +
                    " does not match the predicted gap " + std::to_string(gap));
    }
    return w;
}

Classification classify(const SpectralObservable& b, const std::string& moment,
                        const Experiment& exp, const SpectralObservable& measured) {
    const Tolerances& tol = exp.tolerances();
    if (b.dim() != exp.dim() || measured.dim() != exp.dim()) {
        throw DimensionMismatch("classify: dimension mismatch");
    }
    const Matrix u_tail = exp.timeline().evolve_between(moment, exp.timeline().final_moment());
    const SpectralObservable b_final = forward_evolve_observable(b, u_tail, tol);

    double max_cross = 0.0;
    for (int k = 0; k < b_final.size(); ++k) {
        for (int kp = 0; kp < b_final.size(); ++kp) {
            if (kp == k) continue;
            for (int n = 0; n < measured.size(); ++n) {
                max_cross = std::max(
                    max_cross,
                    (b_final.projector(k) * measured.projector(n) * b_final.projector(kp)).norm());
            }
        }
    }
    const double comm = commutator_norm(b_final.matrix(), measured.matrix());

    // Cross-check the two equivalent criteria. The commutator picks up the
    // eigenvalue scales, so compare against a scaled band and only reject
    // decisive contradictions.
    const double scale =
        std::max(1.0, b_final.matrix().norm() * measured.matrix().norm());
    const bool cross_commutes = max_cross <= tol.atol_matrix;
    if (cross_commutes && comm > 100.0 * tol.atol_matrix * scale) {
        throw Error("classify: cross-block and commutator criteria disagree");
    }
    if (!cross_commutes && max_cross > 100.0 * tol.atol_matrix && comm <= tol.atol_matrix) {
        throw Error("classify: commutator vanishes but cross-blocks do not");
    }

    Classification result;
    result.commutator_norm_value = comm;
    result.max_cross_block_norm = max_cross;
    if (cross_commutes) {
        result.verdict = Verdict::WhichResult;
        auto cert = simplest_certificate(b, moment, exp, measured);
        if (cert) {
            result.certificate = std::move(*cert);
        } else {
            WhichResultCertificate weak;
            weak.simplest = false;
            weak.moment = moment;
            result.certificate = std::move(weak);
        }
    } else {
        result.verdict = Verdict::Interference;
        auto witness = construct_witness(b, moment, exp, measured);
        if (!witness) {
            throw Error("classify: interference verdict but no witness (internal inconsistency)");
        }
        result.witness = std::move(*witness);
    }
    return result;
}

Classification classify(const Candidate& candidate, const Experiment& exp) {
    return classify(candidate.observable, candidate.moment, exp,
                    exp.effective_measured(candidate));
}

ClassificationReport classify_all(const Experiment& exp) {
    ClassificationReport report;
    report.entries.reserve(exp.candidates().size());
    for (const Candidate& c : exp.candidates()) {
        Classification cls = classify(c, exp);
        if (c.meaningful && cls.verdict == Verdict::WhichResult) {
            report.absolute_which_result = true;
        }
        report.entries.push_back({&c, std::move(cls)});
    }
    return report;
}

} // namespace quivis
