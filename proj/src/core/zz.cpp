#include "core/zz.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/units.hpp"

namespace drc {

namespace {

double coupling(const CircuitParams &p, Resonator l, Qubit b) {
    if (l == Resonator::A)
        return b == Qubit::X ? p.g_ax : p.g_ay;
    return b == Qubit::X ? p.g_bx : p.g_by;
}

// Anharmonicity inherited by resonator lambda from dispersive qubit dressing:
// alpha_lambda = sum_beta alpha_beta (g_{l beta}/Delta_{l beta})^4.
double resonator_alpha(const CircuitParams &p, const DetuningSet &d,
                       Resonator lambda, PoleGuard &guard) {
    const int l = static_cast<int>(lambda);
    double alpha = 0.0;
    const double alphas[2] = {p.alpha_x, p.alpha_y};
    for (int b = 0; b < 2; ++b) {
        const double ratio = coupling(p, lambda, static_cast<Qubit>(b)) /
                             guard.check(d.delta[l][b], "Delta_l_beta");
        alpha += alphas[b] * ratio * ratio * ratio * ratio;
    }
    return alpha;
}

} // namespace

double xi2_term(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, PoleGuard &guard) {
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const double den_y = guard.check(d.delta_xy + params.alpha_y, "Delta_xy + alpha_y");
    const double den_x = guard.check(d.delta_xy - params.alpha_x, "Delta_xy - alpha_x");
    return 2.0 * params.g_xy * params.g_xy * (params.alpha_x + params.alpha_y) /
           (den_y * den_x);
}

double xi3_term(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, Resonator lambda, bool symmetrized,
                PoleGuard &guard) {
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const int l = static_cast<int>(lambda);
    const double g_lx = coupling(params, lambda, Qubit::X);
    const double g_ly = coupling(params, lambda, Qubit::Y);
    const double delta_xy = guard.check(d.delta_xy, "Delta_xy");
    const double den_y = guard.check(d.delta_xy + params.alpha_y, "Delta_xy + alpha_y");
    const double den_x = guard.check(d.delta_xy - params.alpha_x, "Delta_xy - alpha_x");
    const double inv_ly = 1.0 / guard.check(d.delta[l][1], "Delta_ly");
    const double pref_second =
        symmetrized ? 1.0 / guard.check(d.delta[l][0], "Delta_lx") : inv_ly;
    return 2.0 * params.g_xy * g_lx * g_ly *
           (inv_ly * (1.0 / delta_xy - 2.0 / den_y) -
            pref_second * (1.0 / delta_xy - 2.0 / den_x));
}

double xi4s_term(const CircuitParams &params, double omega_x_ghz,
                 double omega_y_ghz, Resonator lambda, PoleGuard &guard) {
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const int l = static_cast<int>(lambda);
    const double g_lx = coupling(params, lambda, Qubit::X);
    const double g_ly = coupling(params, lambda, Qubit::Y);
    const double g2 = g_ly * g_ly * g_lx * g_lx;
    const double delta_ly = guard.check(d.delta[l][1], "Delta_ly");
    const double delta_lx = guard.check(d.delta[l][0], "Delta_lx");
    const double delta_xy = guard.check(d.delta_xy, "Delta_xy");
    const double den_y = guard.check(d.delta_xy + params.alpha_y, "Delta_xy + alpha_y");
    const double den_x = guard.check(d.delta_xy - params.alpha_x, "Delta_xy - alpha_x");
    const double alpha_l = resonator_alpha(params, d, lambda, guard);
    const double pair_den =
        guard.check(delta_ly + delta_lx - alpha_l, "Delta_ly + Delta_lx - alpha_l");
    const double sum_inv = 1.0 / delta_ly + 1.0 / delta_lx;
    const double t1 = 2.0 * g2 / pair_den * sum_inv * sum_inv;
    const double t2 = g2 / (delta_ly * delta_ly) *
                      (1.0 / delta_xy + 1.0 / delta_lx - 2.0 / den_x);
    const double t3 = g2 / (delta_lx * delta_lx) *
                      (2.0 / den_y - 1.0 / delta_xy + 1.0 / delta_ly);
    return t1 - t2 - t3;
}

double xi4c0_term(const CircuitParams &params, double omega_x_ghz,
                  double omega_y_ghz, Qubit beta, PoleGuard &guard) {
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const int b = static_cast<int>(beta);
    const double g_a = coupling(params, Resonator::A, beta);
    const double g_b = coupling(params, Resonator::B, beta);
    const double g2 = g_a * g_a * g_b * g_b;
    const double omega_beta = beta == Qubit::X ? d.omega_x : d.omega_y;
    const double alpha_beta = beta == Qubit::X ? params.alpha_x : params.alpha_y;
    const double delta_a = guard.check(d.delta[0][b], "Delta_a_beta");
    const double delta_b = guard.check(d.delta[1][b], "Delta_b_beta");
    const double two_photon = guard.check(
        2.0 * omega_beta + alpha_beta - params.omega_a - params.omega_b,
        "2 omega_beta + alpha_beta - omega_a - omega_b");
    const double mid = (2.0 * omega_beta - params.omega_a - params.omega_b) /
                       (delta_a * delta_b);
    return g2 * (2.0 / (delta_a * delta_b * guard.check(omega_beta, "omega_beta")) +
                 mid * mid / two_photon);
}

double xi4c1_term(const CircuitParams &params, double omega_x_ghz,
                  double omega_y_ghz, Qubit beta, PoleGuard &guard) {
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const int b = static_cast<int>(beta);
    const double g_a = coupling(params, Resonator::A, beta);
    const double g_b = coupling(params, Resonator::B, beta);
    const double g2 = g_a * g_a * g_b * g_b;
    const double omega_beta =
        guard.check(beta == Qubit::X ? d.omega_x : d.omega_y, "omega_beta");
    const double alpha_beta = beta == Qubit::X ? params.alpha_x : params.alpha_y;
    const double delta_a = guard.check(d.delta[0][b], "Delta_a_beta");
    const double delta_b = guard.check(d.delta[1][b], "Delta_b_beta");
    const double den_a = guard.check(delta_a + alpha_beta, "Delta_a_beta + alpha_beta");
    const double den_b = guard.check(delta_b + alpha_beta, "Delta_b_beta + alpha_beta");
    return 2.0 * g2 / (omega_beta * den_a * den_b) +
           2.0 * g2 / (omega_beta * delta_a * delta_b);
}

ZZBreakdown zz_breakdown(const CircuitParams &params, double omega_x_ghz,
                         double omega_y_ghz, const ZZOptions &options) {
    PoleGuard guard;
    ZZBreakdown out;
    out.xi2 = xi2_term(params, omega_x_ghz, omega_y_ghz, guard);
    out.xi3_a = xi3_term(params, omega_x_ghz, omega_y_ghz, Resonator::A,
                         options.xi3_symmetrized, guard);
    out.xi3_b = xi3_term(params, omega_x_ghz, omega_y_ghz, Resonator::B,
                         options.xi3_symmetrized, guard);
    out.xi4s_a = xi4s_term(params, omega_x_ghz, omega_y_ghz, Resonator::A, guard);
    out.xi4s_b = xi4s_term(params, omega_x_ghz, omega_y_ghz, Resonator::B, guard);
    out.xi_total = out.ladder();
    if (options.cross_kerr) {
        out.xi4c0_x = xi4c0_term(params, omega_x_ghz, omega_y_ghz, Qubit::X, guard);
        out.xi4c0_y = xi4c0_term(params, omega_x_ghz, omega_y_ghz, Qubit::Y, guard);
        out.xi4c1_x = xi4c1_term(params, omega_x_ghz, omega_y_ghz, Qubit::X, guard);
        out.xi4c1_y = xi4c1_term(params, omega_x_ghz, omega_y_ghz, Qubit::Y, guard);
        out.xi_total = out.ladder() + out.xi4c0() - out.xi4c1();
    }
    out.near_pole = guard.near_pole();
    return out;
}

std::vector<double> zz_pole_catalog(const CircuitParams &params,
                                    double omega_x_ghz, double lo_ghz,
                                    double hi_ghz) {
    std::vector<double> poles;
    auto add = [&](double v) {
        if (v >= lo_ghz && v <= hi_ghz)
            poles.push_back(v);
    };
    add(omega_x_ghz);                     // Delta_xy = 0
    add(omega_x_ghz + params.alpha_x);    // Delta_xy = alpha_x
    add(omega_x_ghz - params.alpha_y);    // Delta_xy = -alpha_y
    add(params.omega_a - params.alpha_y); // Delta_ay + alpha_y = 0
    add(params.omega_b - params.alpha_y); // Delta_by + alpha_y = 0
    add(0.5 * (params.omega_a + params.omega_b - params.alpha_y)); // two-photon
    add(params.omega_a);                  // Delta_ay = 0
    add(params.omega_b);                  // Delta_by = 0

    // Two-resonator double-excitation denominators of the fourth-order terms:
    // Delta_ly + Delta_lx = alpha_l(omega_y); solve by fixed point (alpha_l
    // is a ~kHz-scale correction).
    for (Resonator lambda : {Resonator::A, Resonator::B}) {
        const double omega_l =
            lambda == Resonator::A ? params.omega_a : params.omega_b;
        double omega_y = 2.0 * omega_l - omega_x_ghz;
        for (int iter = 0; iter < 5; ++iter) {
            PoleGuard guard;
            const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y);
            double alpha_l = 0.0;
            try {
                alpha_l = resonator_alpha(params, d, lambda, guard);
            } catch (const pole_error &) {
                break; // coincides with a resonance already cataloged
            }
            omega_y = 2.0 * omega_l - omega_x_ghz + alpha_l;
        }
        add(omega_y);
    }

    std::sort(poles.begin(), poles.end());
    // Collapse coincident families (e.g. degenerate parameter choices).
    std::vector<double> unique;
    for (double p : poles)
        if (unique.empty() || std::fabs(p - unique.back()) > 1e-9)
            unique.push_back(p);
    return unique;
}

} // namespace drc
