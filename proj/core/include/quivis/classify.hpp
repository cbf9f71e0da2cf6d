#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivis/mixture.hpp"

namespace quivis {

/// Certificate that a candidate B is a which-result observable.
///
/// `simplest` is true when the strong bijection condition holds: every
/// eigen-event of B evolves into the range of exactly one measured
/// eigen-projector, the map k ↦ n(k) is a bijection, and consequently B
/// equals the retrospected measured observable projector-wise. When only
/// the commutation criterion holds, `simplest` is false and `bijection`
/// is empty.
struct WhichResultCertificate {
    std::vector<int> bijection; // bijection[k] = n(k); empty unless simplest
    bool simplest = false;
    std::string moment;
};

/// Constructed counterexample for an interference verdict: a pure initial
/// state whose raw and butchered final statistics differ on outcome n.
struct InterferenceWitness {
    int k = 0, k_prime = 0; // candidate eigen-event indices, k ≠ k′
    int n = 0;              // measured outcome index
    Vector l_k, l_k_prime;  // unit vectors in the ranges of Q_k^f, Q_k′^f
    Complex alpha, beta;    // superposition amplitudes, both nonzero
    DensityOperator initial_state; // back-evolved pure witness at t_i
    double predicted_gap = 0.0;    // |⟨l_k|P_n|l_k′⟩|
    bool marginal = false;         // predicted_gap < witness_tol
};

enum class Verdict { WhichResult, Interference };

/// Outcome of classifying one candidate observable.
struct Classification {
    Verdict verdict = Verdict::WhichResult;
    std::optional<WhichResultCertificate> certificate; // present iff WhichResult
    std::optional<InterferenceWitness> witness;        // present iff Interference
    double commutator_norm_value = 0.0;                // ‖[B^f, A]‖_F
    double max_cross_block_norm = 0.0;                 // max_{k≠k′,n} ‖Q_k^f P_n Q_k′^f‖_F
};

/// Maximum deviation between the final-measurement statistics of ρ and of
/// its butchered mixture with respect to B:
///   max_n |tr(P_n U ρ U†) − tr(P_n U ρ_M U†)|.
/// A which-result configuration is "blind": the deviation vanishes for
/// every state.
double verify_blindness(const DensityOperator& rho_t, const SpectralObservable& b,
                        const Matrix& u_tail, const SpectralObservable& a,
                        const Tolerances& tol = {});

/// True iff some final outcome distinguishes ρ from its butchered mixture
/// (deviation above prob_tol).
bool exhibits_interference(const DensityOperator& rho_t, const SpectralObservable& b,
                           const Matrix& u_tail, const SpectralObservable& a,
                           const Tolerances& tol = {});

/// Decides the strong which-result condition for B at `moment` against
/// `measured`, algebraically:
/// for each eigen-event Q_k, S_k = U Q_k U† must be contained in the range
/// of exactly one measured projector (‖P_n S_k − S_k‖_F ≤ atol_matrix),
/// and k ↦ n(k) must be a bijection. Containment is equivalent to "every
/// state with the property Q_k yields outcome n with certainty". On
/// success the certificate additionally asserts that B equals the
/// retrospected measured observable projector-wise.
std::optional<WhichResultCertificate> simplest_certificate(const SpectralObservable& b,
                                                     const std::string& moment,
                                                     const Experiment& exp,
                                                     const SpectralObservable& measured);

/// Builds an interference witness from the largest cross-block
/// Q_k^f P_n Q_k′^f: its leading singular vectors give the two
/// B^f-eigenstates whose superposition (with the phase of β rotated to
/// make the cross term real positive) shows a gap of exactly
/// |⟨l_k|P_n|l_k′⟩| on outcome n. Returns nullopt when every cross-block
/// vanishes (the which-result case). The returned witness has been
/// re-simulated: its measured gap matches predicted_gap within prob_tol.
std::optional<InterferenceWitness> construct_witness(const SpectralObservable& b,
                                                     const std::string& moment,
                                                     const Experiment& exp,
                                                     const SpectralObservable& measured);

/// Full classification of B at `moment` against `measured`: the verdict is
/// decided by the cross-block criterion (all Q_k^f P_n Q_k′^f = 0), which
/// is equivalent to [B^f, A] = 0; both quantities are computed and
/// cross-checked. A which-result verdict carries a certificate (simplest
/// flag from simplest_certificate); an interference verdict carries a witness.
Classification classify(const SpectralObservable& b, const std::string& moment,
                        const Experiment& exp, const SpectralObservable& measured);

/// Classifies a declared candidate (against its effective measured
/// observable).
Classification classify(const Candidate& candidate, const Experiment& exp);

struct CandidateReport {
    const Candidate* candidate; // points into the experiment's candidate list
    Classification classification;
};

struct ClassificationReport {
    std::vector<CandidateReport> entries; // in candidate declaration order
    /// True iff at least one meaning-flagged candidate is which-result:
    /// the experiment can then be viewed as which-result in an absolute
    /// sense.
    bool absolute_which_result = false;
};

/// Classifies every candidate of the experiment, in declaration order.
ClassificationReport classify_all(const Experiment& exp);

} // namespace quivis
