#include "quivis/catalog.hpp"

#include <cmath>
#include <numbers>

namespace quivis::catalog {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Balanced beam splitter on modes (a, b) of a dim-dimensional space:
/// the 2x2 block (1/√2)[[1, i],[i, 1]], identity elsewhere.
Matrix beam_splitter(int dim, int a, int b) {
    Matrix u = Matrix::Identity(dim, dim);
    const double s = 1.0 / std::sqrt(2.0);
    u(a, a) = s;
    u(a, b) = kI * s;
    u(b, a) = kI * s;
    u(b, b) = s;
    return u;
}

Matrix basis_projector(int dim, std::initializer_list<int> modes) {
    Matrix p = Matrix::Zero(dim, dim);
    for (int m : modes) p(m, m) = 1.0;
    return p;
}

Vector basis_ket(int dim, int mode) {
    Vector v = Vector::Zero(dim);
    v(mode) = 1.0;
    return v;
}

/// Spin-1/2 eigenkets along a unit axis (nx, ny, nz).
std::pair<Vector, Vector> spin_axis_kets(const std::array<double, 3>& axis) {
    const double theta = std::acos(std::clamp(axis[2], -1.0, 1.0));
    const double phi = std::atan2(axis[1], axis[0]);
    Vector plus(2), minus(2);
    plus << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
    minus << -std::polar(std::sin(theta / 2.0), -phi), std::cos(theta / 2.0);
    return {plus, minus};
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

/// The Stern-Gerlach permutation on spin ⊗ {entry, other} path modes:
/// |ax+⟩|p_entry⟩ → |ax+⟩|p_up⟩, |ax−⟩|p_entry⟩ → |ax−⟩|p_low⟩, with the
/// formally unreachable second path mode routed so that the whole device
/// premeasures the spin exactly (U maps span{ax±} ⊗ path onto
/// spin ⊗ {p_up/p_low}).
Matrix stern_gerlach_unitary(int dim, const Vector& spin_plus, const Vector& spin_minus,
                             const Vector& path_up, const Vector& path_low) {
    Matrix u = Matrix::Zero(dim, dim);
    u += kron(spin_plus, path_up) * kron(spin_plus, path_up).adjoint();
    u += kron(spin_minus, path_up) * kron(spin_plus, path_low).adjoint();
    u += kron(spin_minus, path_low) * kron(spin_minus, path_up).adjoint();
    u += kron(spin_plus, path_low) * kron(spin_minus, path_low).adjoint();
    return u;
}

} // namespace

Experiment mach_zehnder(double theta_degrees, bool interference_device, const Tolerances& tol) {
    if (!(theta_degrees >= 0.0 && theta_degrees <= 180.0)) {
        throw ParameterOutOfRange("mach_zehnder: θ must lie in [0, 180] degrees");
    }
    const double theta = theta_degrees * std::numbers::pi / 180.0;

    Vector psi(2);
    psi << std::cos(theta), kI * std::sin(theta);

    Matrix mirrors(2, 2); // phase i times mode swap
    mirrors << 0, kI, kI, 0;
    Matrix u = interference_device ? Matrix(beam_splitter(2, 0, 1) * mirrors) : mirrors;

    SpectralObservable a({1.0, 2.0}, {basis_projector(2, {0}), basis_projector(2, {1})},
                         {"D1", "D2"}, tol);
    SpectralObservable b({1.0, 2.0}, {basis_projector(2, {0}), basis_projector(2, {1})},
                         {"Q_h", "Q_v"}, tol);

    return Experiment(DensityOperator::pure(psi, tol), Timeline({"t_i", "t_f"}, {u}, tol), a,
                      {{"B", "t_i", b, true, std::nullopt, std::nullopt}}, tol);
}

Experiment upgraded_mach_zehnder(bool top_bs_present, const Tolerances& tol) {
    // Modes: 0 = lh (lower horizontal), 1 = uh (upper horizontal), 2 = v.
    const int lh = 0, uh = 1, v = 2;

    Vector psi(3);
    psi << 1.0 / std::sqrt(2.0), 0.0, kI / std::sqrt(2.0);

    const Matrix intermediary = beam_splitter(3, v, uh);
    Matrix tail = Matrix::Identity(3, 3);
    if (top_bs_present) {
        Matrix mirror_phase = Matrix::Identity(3, 3);
        mirror_phase(uh, uh) = -1.0; // calibrated so the balanced input exits (1/2, 0, 1/2)
        tail = beam_splitter(3, uh, v) * mirror_phase;
    }

    SpectralObservable a(
        {1.0, 2.0, 3.0},
        {basis_projector(3, {lh}), basis_projector(3, {uh}), basis_projector(3, {v})},
        {"D-bottom", "D-upperhorizontal", "D-top"}, tol);

    SpectralObservable b({1.0, 2.0}, {basis_projector(3, {lh}), basis_projector(3, {uh, v})},
                         {"Q_h", "Q_v"}, tol);
    SpectralObservable b0(
        {1.0, 2.0, 3.0},
        {basis_projector(3, {lh}), basis_projector(3, {uh}), basis_projector(3, {v})},
        {"Q_lh", "Q_uh", "Q_v"}, tol);
    SpectralObservable b0_coarse = b0.coarsen({{0}, {1, 2}}, {1.0, 2.0}, tol);

    // f(A): the coarsening of the localization that merges the two
    // detections fed by the reflected beam.
    const std::vector<std::vector<int>> fa_partition{{0}, {1, 2}};
    const std::vector<double> fa_values{1.0, 2.0};

    std::vector<Candidate> candidates;
    if (top_bs_present) {
        candidates.push_back({"B", "t_i", b, true, fa_partition, fa_values});
    } else {
        candidates.push_back({"B", "t_i", b, true, std::nullopt, std::nullopt});
        candidates.push_back({"B_fA", "t_i", b, true, fa_partition, fa_values});
    }
    candidates.push_back({"B_0", "t_0", b0, true, std::nullopt, std::nullopt});
    candidates.push_back({"B'_0", "t_0", b0_coarse, true, std::nullopt, std::nullopt});

    return Experiment(DensityOperator::pure(psi, tol),
                      Timeline({"t_i", "t_0", "t_f"}, {intermediary, tail}, tol), a,
                      std::move(candidates), tol);
}

Experiment stern_gerlach(const std::array<double, 3>& axis, const Tolerances& tol) {
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw InvalidAxis("stern_gerlach: axis must be a unit 3-vector");
    }
    auto [plus, minus] = spin_axis_kets(axis);
    const Vector up = basis_ket(2, 0), low = basis_ket(2, 1);

    const Matrix u = stern_gerlach_unitary(4, plus, minus, up, low);

    Matrix p_up = Matrix::Zero(4, 4), p_low = Matrix::Zero(4, 4);
    p_up(0, 0) = p_up(2, 2) = 1.0;  // spin ⊗ |path 0⟩
    p_low(1, 1) = p_low(3, 3) = 1.0;
    SpectralObservable a({1.0, 2.0}, {p_up, p_low}, {"dot-upper", "dot-lower"}, tol);

    Matrix q_plus = Matrix::Zero(4, 4), q_minus = Matrix::Zero(4, 4);
    const Matrix spin_plus_proj = plus * plus.adjoint();
    const Matrix spin_minus_proj = minus * minus.adjoint();
    for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
            for (int p = 0; p < 2; ++p) {
                q_plus(s * 2 + p, sp * 2 + p) = spin_plus_proj(s, sp);
                q_minus(s * 2 + p, sp * 2 + p) = spin_minus_proj(s, sp);
            }
        }
    }
    SpectralObservable b({0.5, -0.5}, {q_plus, q_minus}, {"spin+", "spin-"}, tol);

    Vector psi = kron(Vector((plus + minus) / std::sqrt(2.0)), up);
    return Experiment(DensityOperator::pure(psi, tol), Timeline({"t_i", "t_f"}, {u}, tol), a,
                      {{"B", "t_i", b, true, std::nullopt, std::nullopt}}, tol);
}

Experiment double_stern_gerlach(const Tolerances& tol) {
    // Path modes: 0 = dot upper-x+, 1 = dot upper-x−, 2 = dot lower-y+,
    // 3 = dot lower-y−. Upper half-space = {0, 1}, lower = {2, 3}; the
    // particle enters in path 0, the lower branch entry is path 2.
    const int dim = 8;
    Vector zp = basis_ket(2, 0), zm = basis_ket(2, 1);
    Vector xp(2), xm(2), yp(2), ym(2);
    const double s = 1.0 / std::sqrt(2.0);
    xp << s, s;
    xm << s, -s;
    yp << s, kI * s;
    ym << s, -kI * s;

    // Step 1: route z± into the half-space entry modes.
    Matrix step1 = Matrix::Zero(dim, dim);
    auto pk = [&](const Vector& spin, int path) { return kron(spin, basis_ket(4, path)); };
    step1 += pk(zp, 0) * pk(zp, 0).adjoint();
    step1 += pk(zp, 1) * pk(zp, 1).adjoint();
    step1 += pk(zp, 3) * pk(zp, 3).adjoint();
    step1 += pk(zp, 2) * pk(zp, 2).adjoint();
    step1 += pk(zm, 2) * pk(zm, 0).adjoint(); // z− entering the device goes down
    step1 += pk(zm, 0) * pk(zm, 2).adjoint();
    step1 += pk(zm, 1) * pk(zm, 1).adjoint();
    step1 += pk(zm, 3) * pk(zm, 3).adjoint();

    // Step 2: a Stern-Gerlach premeasurement per branch (x up, y down).
    Matrix step2 = Matrix::Zero(dim, dim);
    step2 += pk(xp, 0) * pk(xp, 0).adjoint();
    step2 += pk(xm, 0) * pk(xp, 1).adjoint();
    step2 += pk(xm, 1) * pk(xm, 0).adjoint();
    step2 += pk(xp, 1) * pk(xm, 1).adjoint();
    step2 += pk(yp, 2) * pk(yp, 2).adjoint();
    step2 += pk(ym, 2) * pk(yp, 3).adjoint();
    step2 += pk(ym, 3) * pk(ym, 2).adjoint();
    step2 += pk(yp, 3) * pk(ym, 3).adjoint();

    auto dot = [&](int path) {
        Matrix p = Matrix::Zero(dim, dim);
        p(0 * 4 + path, 0 * 4 + path) = 1.0;
        p(1 * 4 + path, 1 * 4 + path) = 1.0;
        return p;
    };
    SpectralObservable a({1.0, 2.0, 3.0, 4.0}, {dot(0), dot(1), dot(2), dot(3)},
                         {"dot-upper-x+", "dot-upper-x-", "dot-lower-y+", "dot-lower-y-"}, tol);

    Matrix upper = dot(0) + dot(1);
    Matrix lower = dot(2) + dot(3);
    SpectralObservable b({1.0, 2.0}, {upper, lower}, {"upper-half", "lower-half"}, tol);

    Vector psi = kron(Vector((zp + zm) / std::sqrt(2.0)), basis_ket(4, 0));
    return Experiment(DensityOperator::pure(psi, tol),
                      Timeline({"t_i", "t_0", "t_f"}, {step1, step2}, tol), a,
                      {{"B", "t_0", b, true, std::nullopt, std::nullopt}}, tol);
}

Experiment two_slit(int bins, bool interference_screen, const Tolerances& tol) {
    if (bins < 4 || bins % 2 != 0 || bins > 64) {
        throw ParameterOutOfRange("two_slit: bins must be even, ≥ 4, and ≤ 64");
    }
    const int n = bins;
    const int s0 = 1, s1 = 2; // slit modes

    Matrix u(n, n);
    SpectralObservable a = SpectralObservable::trivial(n); // replaced below
    if (interference_screen) {
        // Discrete diffraction kernel: slit mode s becomes the plane wave
        // e^{2πi·s·j/n}/√n over the screen bins, so the two-slit
        // superposition lands with amplitude ∝ 1 + e^{iφ_j}, φ_j linear
        // in j. The columns are the unitary DFT, orthonormal as they
        // stand.
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                u(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                                     2.0 * std::numbers::pi * j * k / n);
            }
        }
        std::vector<double> values;
        std::vector<Matrix> projectors;
        std::vector<std::string> labels;
        for (int j = 0; j < n; ++j) {
            values.push_back(static_cast<double>(j + 1));
            projectors.push_back(basis_projector(n, {j}));
            labels.push_back("bin-" + std::to_string(j));
        }
        a = SpectralObservable(values, projectors, labels, tol);
    } else {
        // Farther distance: each slit image reaches its own detector; all
        // other modes land outside both detectors.
        u = Matrix::Zero(n, n);
        u(0, s0) = 1.0;
        u(n - 1, s1) = 1.0;
        int target = 1;
        for (int src = 0; src < n; ++src) {
            if (src == s0 || src == s1) continue;
            u(target++, src) = 1.0;
        }
        Matrix rest = Matrix::Identity(n, n);
        rest -= basis_projector(n, {0});
        rest -= basis_projector(n, {n - 1});
        a = SpectralObservable({1.0, 2.0, 3.0},
                               {basis_projector(n, {0}), basis_projector(n, {n - 1}), rest},
                               {"detector-slit0", "detector-slit1", "no-detection"}, tol);
    }

    Matrix rest_b = Matrix::Identity(n, n);
    rest_b -= basis_projector(n, {s0});
    rest_b -= basis_projector(n, {s1});
    SpectralObservable b({1.0, 2.0, 3.0},
                         {basis_projector(n, {s0}), basis_projector(n, {s1}), rest_b},
                         {"slit-0", "slit-1", "elsewhere"}, tol);

    Vector psi = Vector::Zero(n);
    psi(s0) = 1.0 / std::sqrt(2.0);
    psi(s1) = 1.0 / std::sqrt(2.0);

    return Experiment(DensityOperator::pure(psi, tol), Timeline({"t_i", "t_f"}, {u}, tol), a,
                      {{"B", "t_i", b, true, std::nullopt, std::nullopt}}, tol);
}

const std::vector<std::string>& ids() {
    static const std::vector<std::string> list{
        "mz-whichway",   "mz-interference", "umz-interference", "umz-whichway",
        "sg",            "double-sg",       "two-slit-near",    "two-slit-far",
    };
    return list;
}

std::string describe(const std::string& id) {
    if (id == "mz-whichway") return "Mach-Zehnder which-way device (second beam splitter removed)";
    if (id == "mz-interference") return "Mach-Zehnder interference device (second beam splitter in place)";
    if (id == "umz-interference") return "upgraded three-splitter Mach-Zehnder, top beam splitter in place";
    if (id == "umz-whichway") return "upgraded three-splitter Mach-Zehnder, top beam splitter removed";
    if (id == "sg") return "Stern-Gerlach spin-projection measurement (coarse path dots)";
    if (id == "double-sg") return "double Stern-Gerlach: z-routing, then x (upper) or y (lower) dots";
    if (id == "two-slit-near") return "two slits, interference screen at the close distance";
    if (id == "two-slit-far") return "two slits, per-slit detectors at the farther distance";
    throw Error("catalog: unknown scenario id '" + id + "'");
}

Experiment build(const std::string& id, const Parameters& params, const Tolerances& tol) {
    if (id == "mz-whichway") return mach_zehnder(params.theta_degrees, false, tol);
    if (id == "mz-interference") return mach_zehnder(params.theta_degrees, true, tol);
    if (id == "umz-interference") return upgraded_mach_zehnder(true, tol);
    if (id == "umz-whichway") return upgraded_mach_zehnder(false, tol);
    if (id == "sg") return stern_gerlach(params.axis, tol);
    if (id == "double-sg") return double_stern_gerlach(tol);
    if (id == "two-slit-near") return two_slit(params.bins, true, tol);
    if (id == "two-slit-far") return two_slit(params.bins, false, tol);
    throw Error("catalog: unknown scenario id '" + id + "'");
}

} // namespace quivis::catalog
