#include "core/validate.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "core/network.hpp"
#include "core/perturbation.hpp"
#include "core/spectrum.hpp"
#include "core/sweeps.hpp"
#include "core/units.hpp"
#include "core/zz.hpp"

namespace drc {

namespace {

const double kNan = std::numeric_limits<double>::quiet_NaN();

void add_check(Dataset &ds, const char *name, double measured, double expected,
               double tolerance) {
    const bool passed =
        std::isfinite(measured) && std::fabs(measured - expected) <= tolerance;
    ds.append_row({0.0, passed ? 1.0 : 0.0, measured, expected, tolerance});
    ds.set_text(ds.rows() - 1, 0, name);
}

CircuitParams direct_only(const CircuitParams &base) {
    CircuitParams p = base;
    p.g_ax = p.g_ay = p.g_bx = p.g_by = 0.0;
    p.g_ab = 0.0;
    p.validate();
    return p;
}

CircuitParams fully_decoupled(const CircuitParams &base) {
    CircuitParams p = direct_only(base);
    p.g_xy = 0.0;
    p.validate();
    return p;
}

CircuitParams scaled_qr(const CircuitParams &base, double s) {
    CircuitParams p = base;
    p.g_ax *= s;
    p.g_ay *= s;
    p.g_bx *= s;
    p.g_by *= s;
    p.validate();
    return p;
}

SpectrumOptions bosonic_options() {
    SpectrumOptions o;
    o.convention = Convention::Bosonic;
    return o;
}

// Direct-coupling-only device: the full ZZ reduces to the second-order term,
// so the analytic/numeric ratio probes both paths end to end.
void check_direct_only_ratio(Dataset &ds, const CircuitParams &base) {
    CircuitParams p = direct_only(base);
    if (p.g_xy == 0.0) {
        p.g_xy = mhz_to_ghz(1.0);
        p.validate();
    }
    const double wx = 4.5, wy = 4.3;
    PoleGuard guard;
    const double analytic = xi2_term(p, wx, wy, guard);
    const ZZNumeric numeric = zz_numeric(p, wx, wy, bosonic_options());
    const double ratio = numeric.zz_ghz / analytic;
    add_check(ds, "direct_only_zz_ratio", ratio, 1.0, 0.05);
}

// Resonant qubit-resonator pair under the rotating-wave approximation:
// the single-excitation gap is exactly 2g.
void check_resonant_splitting(Dataset &ds, const CircuitParams &base) {
    CircuitParams p = fully_decoupled(base);
    p.g_ax = base.g_ax > 0 ? base.g_ax : mhz_to_ghz(32.0);
    p.validate();
    SpectrumOptions opts;
    opts.rwa = true;
    const double gap = pair_gap_ghz(p, p.omega_a, 5.12, Occupation{1, 0, 0, 0},
                                    Occupation{0, 1, 0, 0}, opts);
    add_check(ds, "resonant_pair_splitting", gap, 2.0 * p.g_ax, 1e-9);
}

// Detuned pair: single-excitation energies match the closed-form eigenvalues
// mean +- sqrt((Delta/2)^2 + g^2).
void check_two_level_closed_form(Dataset &ds, const CircuitParams &base) {
    CircuitParams p = fully_decoupled(base);
    p.g_ax = base.g_ax > 0 ? base.g_ax : mhz_to_ghz(32.0);
    p.validate();
    SpectrumOptions opts;
    opts.rwa = true;
    const double wx = 4.3, wy = 5.12;
    const Spectrum sp = labeled_spectrum(p, wx, wy, opts);
    const auto la = sp.find(Occupation{1, 0, 0, 0});
    const auto lx = sp.find(Occupation{0, 1, 0, 0});
    if (!la || !lx) {
        add_check(ds, "detuned_pair_closed_form", kNan, 0.0, 1e-9);
        return;
    }
    const double mean = 0.5 * (p.omega_a + wx);
    const double split = std::sqrt(0.25 * (wx - p.omega_a) * (wx - p.omega_a) +
                                   p.g_ax * p.g_ax);
    const double err = std::fabs(la->energy_ghz - (mean - split)) +
                       std::fabs(lx->energy_ghz - (mean + split));
    add_check(ds, "detuned_pair_closed_form", err, 0.0, 1e-9);
}

// Full analytic expansion against exact diagonalization at two points well
// inside the dispersive window.
void check_analytic_vs_numeric(Dataset &ds, const CircuitParams &base) {
    const double wx = 4.52;
    for (double wy : {4.90, 4.98}) {
        const ZZBreakdown b = zz_breakdown(base, wx, wy, ZZOptions{});
        const ZZNumeric n = zz_numeric(base, wx, wy, bosonic_options());
        const double diff_mhz = ghz_to_mhz(std::fabs(b.xi_total - n.zz_ghz));
        const double tol_mhz =
            std::max(0.2 * ghz_to_mhz(std::fabs(n.zz_ghz)), 0.03);
        const char *name =
            wy == 4.90 ? "zz_vs_numeric_4p90" : "zz_vs_numeric_4p98";
        add_check(ds, name, diff_mhz, 0.0, tol_mhz);
    }
}

// With every coupling removed the decoupling transformation is the identity.
void check_no_coupling_identity(Dataset &ds, const CircuitParams &base) {
    const CircuitParams p = fully_decoupled(base);
    const double wx = 4.5, wy = 4.2;
    const EffectiveParams eff = effective_params(p, wx, wy);
    const ZZBreakdown b = zz_breakdown(p, wx, wy, ZZOptions{});
    double worst = 0.0;
    worst = std::max(worst, std::fabs(eff.omega_d_x - wx));
    worst = std::max(worst, std::fabs(eff.omega_d_y - wy));
    worst = std::max(worst, std::fabs(eff.omega_d_a - p.omega_a));
    worst = std::max(worst, std::fabs(eff.omega_d_b - p.omega_b));
    worst = std::max(worst, std::fabs(eff.g_d_xy));
    worst = std::max(worst, std::fabs(eff.dw_x));
    worst = std::max(worst, std::fabs(eff.dw_y));
    worst = std::max(worst, std::fabs(b.xi_total));
    add_check(ds, "no_coupling_identity", worst, 0.0, 1e-12);
}

// At a zero of g_d with no direct coupling, the two indirect contributions
// cancel each other exactly.
void check_indirect_balance(Dataset &ds, const CircuitParams &base) {
    CircuitParams p = base;
    p.g_xy = 0.0;
    p.validate();
    const RootScan scan =
        find_switchoff(p, 4.56, SwitchoffTarget::GD, 4.2, 5.0);
    if (scan.roots.empty()) {
        add_check(ds, "indirect_balance_at_switchoff", kNan, 0.0, 1e-9);
        return;
    }
    const EffectiveParams eff = effective_params(p, 4.56, scan.roots[0].root);
    add_check(ds, "indirect_balance_at_switchoff",
              std::fabs(eff.g_in_a + eff.g_in_b), 0.0, 1e-9);
}

// The high-excitation correction equals the mean of the normal- and
// anti-ordered cross-Kerr coefficients summed over resonators.
void check_shift_identity(Dataset &ds, const CircuitParams &base) {
    const double wx = 4.56, wy = 5.12;
    const EffectiveParams eff = effective_params(base, wx, wy);
    double sum = 0.0;
    for (Resonator lam : {Resonator::A, Resonator::B}) {
        const NonlinearTerms t = nonlinear_terms(base, wx, wy, lam, Qubit::Y);
        sum += 0.5 * (t.cross_normal + t.cross_anti);
    }
    add_check(ds, "high_excitation_shift_identity", std::fabs(eff.dw_y - sum),
              0.0, 1e-15);
}

// Leading-order scaling in the qubit-resonator couplings: fourth-order terms
// scale as g^4, the third-order term as g^2 (direct coupling held fixed).
void check_order_scaling(Dataset &ds, const CircuitParams &base) {
    CircuitParams p = base;
    if (p.g_xy == 0.0)
        p.g_xy = mhz_to_ghz(0.5);
    p.validate();
    const CircuitParams half = scaled_qr(p, 0.5);
    const double wx = 4.52, wy = 4.80;
    const ZZBreakdown full_b = zz_breakdown(p, wx, wy, ZZOptions{});
    const ZZBreakdown half_b = zz_breakdown(half, wx, wy, ZZOptions{});
    add_check(ds, "third_order_scaling", full_b.xi3() / half_b.xi3(), 4.0,
              0.04);
    add_check(ds, "fourth_order_self_scaling", full_b.xi4s() / half_b.xi4s(),
              16.0, 0.16);
    add_check(ds, "fourth_order_cross_scaling", full_b.xi4c0() / half_b.xi4c0(),
              16.0, 0.16);
}

// Byte-identical rerun of a sweep dataset.
void check_determinism(Dataset &ds, const CircuitParams &base) {
    const Dataset a =
        zz_sweep_dataset(base, 4.52, 4.75, 4.96, 51, ZZOptions{});
    const Dataset b =
        zz_sweep_dataset(base, 4.52, 4.75, 4.96, 51, ZZOptions{});
    add_check(ds, "sweep_determinism",
              a.to_string() == b.to_string() ? 1.0 : 0.0, 1.0, 0.0);
}

// Capacitive coupling is degree one under joint frequency scaling.
void check_coupling_scaling(Dataset &ds) {
    const double g1 = coupling_qr_ghz(4.0, 65.0, 500.0, 4.5, 4.1);
    const double gs = coupling_qr_ghz(4.0, 65.0, 500.0, 1.7 * 4.5, 1.7 * 4.1);
    add_check(ds, "coupling_frequency_scaling", gs / (1.7 * g1), 1.0, 1e-12);
}

// The exact capacitance-matrix inverse really inverts the matrix.
void check_network_inverse(Dataset &ds) {
    CapacitanceNetwork net;
    net.C_a = 500.0;
    net.C_b = 520.0;
    net.C_x = 65.0;
    net.C_y = 70.0;
    net.C_ax = 4.0;
    net.C_ay = 4.2;
    net.C_bx = 3.8;
    net.C_by = 4.1;
    net.C_xy = 0.2;
    net.C_ab = 0.1;
    net.L_a = 1.2;
    net.L_b = 0.8;
    net.EJ_x = 18.0;
    net.EJ_y = 20.0;
    const Eigen::Matrix4d c = capacitance_matrix(net);
    const Eigen::Matrix4d inv = capacitance_inverse_exact(net);
    const Eigen::Matrix4d residual =
        c * inv - Eigen::Matrix4d::Identity();
    add_check(ds, "network_inverse_residual",
              residual.cwiseAbs().maxCoeff(), 0.0, 1e-10);
}

} // namespace

Dataset run_validation(const CircuitParams &params) {
    Dataset ds({"check", "passed", "measured", "expected", "tolerance"});
    check_direct_only_ratio(ds, params);
    check_resonant_splitting(ds, params);
    check_two_level_closed_form(ds, params);
    check_analytic_vs_numeric(ds, params);
    check_no_coupling_identity(ds, params);
    check_indirect_balance(ds, params);
    check_shift_identity(ds, params);
    check_order_scaling(ds, params);
    check_determinism(ds, params);
    check_coupling_scaling(ds);
    check_network_inverse(ds);
    return ds;
}

bool validation_passed(const Dataset &results) {
    for (std::size_t r = 0; r < results.rows(); ++r)
        if (results.cell(r, 1) == 0.0)
            return false;
    return true;
}

} // namespace drc
