#pragma once

#include <array>
#include <string>
#include <vector>

#include "quivis/experiment.hpp"

namespace quivis::catalog {

/// Mach-Zehnder device on the two propagation modes {h, v}. The first
/// beam splitter acts as a preparator emitting cos θ·|h⟩ + i sin θ·|v⟩;
/// the timeline applies the mirrors and, for the interference device, the
/// second beam splitter. Candidate B = {Q_h, Q_v} at t_i.
/// Throws ParameterOutOfRange unless 0 ≤ θ ≤ 180 (degrees).
Experiment mach_zehnder(double theta_degrees, bool interference_device,
                        const Tolerances& tol = {});

/// Three-beam-splitter Mach-Zehnder on modes {lh, uh, v} with moments
/// t_i < t_0 < t_f. Step t_i→t_0 is the intermediary beam splitter on
/// (v ↔ uh); step t_0→t_f is the mirror-phase-calibrated top beam
/// splitter when present, else the identity. The calibration makes the
/// interference device send the balanced input to the bottom and top
/// detectors with probability one half each.
///
/// Candidates: B = {Q_h, Q_v} at t_i (classified against the coarsened
/// localization that merges the upper-horizontal and top detections when
/// the top BS is present — the two events that interference fuses; for
/// the which-way device B is classified against A and a separate B_fA
/// candidate carries the coarsening), B_0 = mode projectors at t_0, and
/// B'_0 = B_0 with {uh, v} merged.
Experiment upgraded_mach_zehnder(bool top_bs_present, const Tolerances& tol = {});

/// Stern-Gerlach premeasurement of the spin projection along `axis`
/// (unit 3-vector) on spin(2) ⊗ path(2). The path qubit carries the
/// coarse dot position (upper/lower); the particle enters in the upper
/// basis mode (the "center" of the device before deflection). Candidate
/// B = spin projectors along axis at t_i. Throws InvalidAxis.
Experiment stern_gerlach(const std::array<double, 3>& axis, const Tolerances& tol = {});

/// Double Stern-Gerlach on spin(2) ⊗ path(4): step 1 routes z± to the
/// upper/lower half-space, step 2 measures x-spin in the upper branch and
/// y-spin in the lower branch onto four dot modes. Candidate B =
/// half-space projectors at t_0.
Experiment double_stern_gerlach(const Tolerances& tol = {});

/// Wheeler two-slit arrangement on `bins` screen modes. With the
/// interference screen raised at the close distance the evolution is a
/// discrete diffraction kernel (unitary-DFT columns) and A resolves every
/// bin; at the farther distance each slit mode reaches its own detector
/// and A has three events (two detectors plus no-detection). Candidate
/// B = slit projectors (plus the complement event) at t_i.
/// Throws ParameterOutOfRange unless bins is even, ≥ 4, ≤ 64.
Experiment two_slit(int bins, bool interference_screen, const Tolerances& tol = {});

/// Parameters for instantiating catalog scenarios by id.
struct Parameters {
    double theta_degrees = 45.0;
    int bins = 8;
    std::array<double, 3> axis = {0.0, 0.0, 1.0};
};

/// The scenario ids accepted by build(): "mz-whichway", "mz-interference",
/// "umz-interference", "umz-whichway", "sg", "double-sg", "two-slit-near",
/// "two-slit-far".
const std::vector<std::string>& ids();

/// One-line description of a catalog scenario. Throws Error for an
/// unknown id.
std::string describe(const std::string& id);

/// Instantiates a catalog scenario. Throws Error for an unknown id.
Experiment build(const std::string& id, const Parameters& params = {},
                 const Tolerances& tol = {});

} // namespace quivis::catalog
