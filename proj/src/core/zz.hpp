// Analytic static-ZZ expansion: second-order direct term, third-order
// resonator-assisted terms, fourth-order single-resonator terms, and the
// two-resonator cross-Kerr terms, plus the pole catalog of the expansion.
#pragma once

#include <vector>

#include "core/params.hpp"
#include "core/perturbation.hpp"

namespace drc {

struct ZZOptions {
    bool cross_kerr = true;       // include the two-resonator terms
    bool xi3_symmetrized = false; // alternate third-order prefactor (see README)
};

struct ZZBreakdown {
    double xi2 = 0.0;                      // GHz
    double xi3_a = 0.0, xi3_b = 0.0;       // per resonator
    double xi4s_a = 0.0, xi4s_b = 0.0;     // per resonator
    double xi4c0_x = 0.0, xi4c0_y = 0.0;   // per qubit (cross-Kerr, type 0)
    double xi4c1_x = 0.0, xi4c1_y = 0.0;   // per qubit (cross-Kerr, type 1)
    double xi_total = 0.0;                 // xi2+xi3+xi4s [+xi4c0-xi4c1]
    bool near_pole = false;

    double xi3() const { return xi3_a + xi3_b; }
    double xi4s() const { return xi4s_a + xi4s_b; }
    double xi4c0() const { return xi4c0_x + xi4c0_y; }
    double xi4c1() const { return xi4c1_x + xi4c1_y; }
    double ladder() const { return xi2 + xi3() + xi4s(); }
};

// Individual terms (GHz).  All throw pole_error inside the 1 kHz guard.
double xi2_term(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, PoleGuard &guard);
double xi3_term(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, Resonator lambda, bool symmetrized,
                PoleGuard &guard);
double xi4s_term(const CircuitParams &params, double omega_x_ghz,
                 double omega_y_ghz, Resonator lambda, PoleGuard &guard);
double xi4c0_term(const CircuitParams &params, double omega_x_ghz,
                  double omega_y_ghz, Qubit beta, PoleGuard &guard);
double xi4c1_term(const CircuitParams &params, double omega_x_ghz,
                  double omega_y_ghz, Qubit beta, PoleGuard &guard);

ZZBreakdown zz_breakdown(const CircuitParams &params, double omega_x_ghz,
                         double omega_y_ghz, const ZZOptions &options);

// Ascending omega_y values in [lo, hi] where some expansion denominator
// vanishes at fixed omega_x.  Families: Delta_xy = 0, Delta_xy = alpha_x,
// Delta_xy = -alpha_y, omega_y + alpha_y = omega_lambda, 2 omega_y + alpha_y
// = omega_a + omega_b, omega_y = omega_lambda, and the two-resonator
// double-excitation resonances of the fourth-order terms.
std::vector<double> zz_pole_catalog(const CircuitParams &params,
                                    double omega_x_ghz, double lo_ghz,
                                    double hi_ghz);

} // namespace drc
