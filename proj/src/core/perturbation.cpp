#include "core/perturbation.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/units.hpp"

namespace drc {

double PoleGuard::check(double den, const char *what) {
    const double mag = std::fabs(den);
    if (mag < kPoleHardGhz)
        throw pole_error(std::string(what) + " within 1 kHz of zero");
    if (mag < kPoleSoftGhz)
        near_ = true;
    return den;
}

namespace {

double coupling(const CircuitParams &p, Resonator l, Qubit b) {
    if (l == Resonator::A)
        return b == Qubit::X ? p.g_ax : p.g_ay;
    return b == Qubit::X ? p.g_bx : p.g_by;
}

double alpha_of(const CircuitParams &p, Qubit b) {
    return b == Qubit::X ? p.alpha_x : p.alpha_y;
}

} // namespace

DetuningSet DetuningSet::from(const CircuitParams &params, double omega_x_ghz,
                              double omega_y_ghz) {
    DetuningSet d;
    d.omega_x = omega_x_ghz;
    d.omega_y = omega_y_ghz;
    const double omega_q[2] = {omega_x_ghz, omega_y_ghz};
    const double omega_r[2] = {params.omega_a, params.omega_b};
    d.dispersive = true;
    for (int l = 0; l < 2; ++l) {
        for (int b = 0; b < 2; ++b) {
            d.delta[l][b] = omega_q[b] - omega_r[l];
            d.sigma[l][b] = omega_q[b] + omega_r[l];
            const double g = coupling(params, static_cast<Resonator>(l),
                                      static_cast<Qubit>(b));
            d.pair_dispersive[l][b] =
                d.delta[l][b] != 0.0 && g / std::fabs(d.delta[l][b]) < 0.25;
            d.dispersive = d.dispersive && d.pair_dispersive[l][b];
        }
    }
    d.delta_xy = omega_y_ghz - omega_x_ghz;
    d.sigma_xy = omega_y_ghz + omega_x_ghz;
    d.delta_ab = params.omega_b - params.omega_a;
    d.sigma_ab = params.omega_b + params.omega_a;
    return d;
}

double indirect_coupling(const CircuitParams &params, const DetuningSet &d,
                         Resonator lambda, PoleGuard &guard) {
    const int l = static_cast<int>(lambda);
    const double g_lx = coupling(params, lambda, Qubit::X);
    const double g_ly = coupling(params, lambda, Qubit::Y);
    return 0.5 * g_lx * g_ly *
           (1.0 / guard.check(d.delta[l][1], "Delta_ly") +
            1.0 / guard.check(d.delta[l][0], "Delta_lx") -
            1.0 / guard.check(d.sigma[l][1], "Sigma_ly") -
            1.0 / guard.check(d.sigma[l][0], "Sigma_lx"));
}

namespace {

// Decoupled mode frequencies: each qubit shifts up by the sum of
// g^2 (1/Delta - 1/Sigma) brackets over its resonators, and each resonator
// shifts down by the same brackets over its qubits.
void decoupled_frequencies(const CircuitParams &p, const DetuningSet &d,
                           PoleGuard &guard, EffectiveParams &out) {
    auto bracket = [&](int l, int b, const char *what) {
        return 1.0 / guard.check(d.delta[l][b], what) -
               1.0 / guard.check(d.sigma[l][b], what);
    };
    const double g2_ax = p.g_ax * p.g_ax, g2_ay = p.g_ay * p.g_ay;
    const double g2_bx = p.g_bx * p.g_bx, g2_by = p.g_by * p.g_by;
    out.omega_d_x =
        d.omega_x + g2_ax * bracket(0, 0, "Delta_ax") + g2_bx * bracket(1, 0, "Delta_bx");
    out.omega_d_y =
        d.omega_y + g2_ay * bracket(0, 1, "Delta_ay") + g2_by * bracket(1, 1, "Delta_by");
    out.omega_d_a =
        p.omega_a - g2_ax * bracket(0, 0, "Delta_ax") - g2_ay * bracket(0, 1, "Delta_ay");
    out.omega_d_b =
        p.omega_b - g2_bx * bracket(1, 0, "Delta_bx") - g2_by * bracket(1, 1, "Delta_by");
}

double effective_g_ab(const CircuitParams &p, const DetuningSet &d,
                      PoleGuard &guard) {
    double sum = 0.0;
    for (int b = 0; b < 2; ++b) {
        const double g_ab_pair =
            coupling(p, Resonator::A, static_cast<Qubit>(b)) *
            coupling(p, Resonator::B, static_cast<Qubit>(b));
        sum += 0.5 * g_ab_pair *
               (1.0 / guard.check(d.delta[0][b], "Delta_a_beta") +
                1.0 / guard.check(d.delta[1][b], "Delta_b_beta") -
                1.0 / guard.check(d.sigma[0][b], "Sigma_a_beta") -
                1.0 / guard.check(d.sigma[1][b], "Sigma_b_beta"));
    }
    return sum + p.g_ab;
}

} // namespace

double effective_coupling_g_d(const CircuitParams &params, double omega_x_ghz,
                              double omega_y_ghz) {
    PoleGuard guard;
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    return indirect_coupling(params, d, Resonator::A, guard) +
           indirect_coupling(params, d, Resonator::B, guard) + params.g_xy;
}

NonlinearTerms nonlinear_terms(const CircuitParams &params, double omega_x_ghz,
                               double omega_y_ghz, Resonator lambda, Qubit beta) {
    PoleGuard guard;
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const int l = static_cast<int>(lambda);
    const int b = static_cast<int>(beta);
    const double g = coupling(params, lambda, beta);
    const double alpha = alpha_of(params, beta);
    const double delta = guard.check(d.delta[l][b], "Delta");
    const double sigma = guard.check(d.sigma[l][b], "Sigma");
    NonlinearTerms t;
    t.self_kerr = g * g * alpha * (1.0 / (sigma * sigma) - 1.0 / (delta * delta));
    t.cross_normal = 2.0 * g * g * alpha / (delta * delta);
    t.cross_anti = 2.0 * g * g * alpha / (sigma * sigma);
    t.residual_pair = g * g * alpha / (2.0 * delta * delta);
    t.residual_exchange = g * alpha / delta;
    return t;
}

double high_excited_shift(const CircuitParams &params, double omega_x_ghz,
                          double omega_y_ghz, Qubit beta) {
    double shift = 0.0;
    for (Resonator lambda : {Resonator::A, Resonator::B}) {
        const NonlinearTerms t =
            nonlinear_terms(params, omega_x_ghz, omega_y_ghz, lambda, beta);
        shift += 0.5 * (t.cross_normal + t.cross_anti);
    }
    return shift;
}

EffectiveParams effective_params(const CircuitParams &params, double omega_x_ghz,
                                 double omega_y_ghz) {
    PoleGuard guard;
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);

    EffectiveParams out;
    out.dispersive = d.dispersive;
    decoupled_frequencies(params, d, guard, out);
    out.g_in_a = indirect_coupling(params, d, Resonator::A, guard);
    out.g_in_b = indirect_coupling(params, d, Resonator::B, guard);
    out.g_d_xy = out.g_in_a + out.g_in_b + params.g_xy;
    out.g_d_ab = effective_g_ab(params, d, guard);
    out.dw_x = high_excited_shift(params, omega_x_ghz, omega_y_ghz, Qubit::X);
    out.dw_y = high_excited_shift(params, omega_x_ghz, omega_y_ghz, Qubit::Y);
    out.omega_cr_x = out.omega_d_x + out.dw_x;
    out.omega_cr_y = out.omega_d_y + out.dw_y;

    // Rebuild the coupling from the corrected qubit frequencies against bare
    // resonators.
    const DetuningSet dc =
        DetuningSet::from(params, out.omega_cr_x, out.omega_cr_y);
    out.g_cr_xy = indirect_coupling(params, dc, Resonator::A, guard) +
                  indirect_coupling(params, dc, Resonator::B, guard) + params.g_xy;
    out.near_pole = guard.near_pole();
    return out;
}

double corrected_coupling_g_cr(const CircuitParams &params, double omega_x_ghz,
                               double omega_y_ghz) {
    return effective_params(params, omega_x_ghz, omega_y_ghz).g_cr_xy;
}

double chi_step(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, Resonator lambda, Qubit beta, int j) {
    if (j < 0)
        throw std::domain_error("transition index must be non-negative");
    if (j == 0)
        return 0.0;
    PoleGuard guard;
    const DetuningSet d = DetuningSet::from(params, omega_x_ghz, omega_y_ghz);
    const double g = coupling(params, lambda, beta);
    const double den =
        guard.check(d.delta[static_cast<int>(lambda)][static_cast<int>(beta)] +
                        (j - 1) * alpha_of(params, beta),
                    "Delta + (j-1) alpha");
    return j * g * g / den;
}

double kappa_level(const CircuitParams &params, double omega_x_ghz,
                   double omega_y_ghz, Resonator lambda, Qubit beta, int j) {
    return chi_step(params, omega_x_ghz, omega_y_ghz, lambda, beta, j);
}

double chi_state(const CircuitParams &params, double omega_x_ghz,
                 double omega_y_ghz, Resonator lambda, Qubit beta, int j,
                 int levels) {
    if (levels < 2)
        throw std::domain_error("qubit needs at least 2 levels");
    if (j < 0 || j >= levels)
        throw std::domain_error("state index outside the qubit ladder");
    double chi = chi_step(params, omega_x_ghz, omega_y_ghz, lambda, beta, j);
    if (j + 1 < levels)
        chi -= chi_step(params, omega_x_ghz, omega_y_ghz, lambda, beta, j + 1);
    return chi;
}

} // namespace drc
