// Fourth-order effective parameters of the dispersively coupled circuit:
// decoupled frequencies, effective couplings, high-excitation corrections,
// transformed nonlinear coefficients, and generalized dispersive shifts.
#pragma once

#include "core/params.hpp"

namespace drc {

enum class Resonator { A = 0, B = 1 };
enum class Qubit { X = 0, Y = 1 };

// Tracks formula denominators: values within 1 kHz of zero abort with
// pole_error; within 10 MHz set the near-pole flag.
class PoleGuard {
public:
    // Returns `den` unchanged after checking it.
    double check(double den, const char *what);
    bool near_pole() const { return near_; }

private:
    bool near_ = false;
};

// Pairwise detunings/summations at instantaneous qubit frequencies.
// Delta_{lb} = omega_beta - omega_lambda, Sigma_{lb} = omega_beta + omega_lambda,
// Delta_xy = omega_y - omega_x, Delta_ab = omega_b - omega_a.
struct DetuningSet {
    double omega_x = 0.0, omega_y = 0.0;
    double delta[2][2] = {};  // [resonator][qubit]
    double sigma[2][2] = {};
    double delta_xy = 0.0, sigma_xy = 0.0;
    double delta_ab = 0.0, sigma_ab = 0.0;
    bool pair_dispersive[2][2] = {}; // g/|Delta| < 1/4 per qubit-resonator pair
    bool dispersive = false;         // all four pairs dispersive

    static DetuningSet from(const CircuitParams &params, double omega_x_ghz,
                            double omega_y_ghz);
};

struct EffectiveParams {
    double omega_d_x = 0.0, omega_d_y = 0.0; // decoupled qubits (GHz)
    double omega_d_a = 0.0, omega_d_b = 0.0; // decoupled resonators (GHz)
    double g_in_a = 0.0, g_in_b = 0.0; // per-resonator indirect coupling (GHz)
    double g_d_xy = 0.0;               // total effective qubit-qubit coupling
    double g_d_ab = 0.0;               // effective resonator-resonator coupling
    double dw_x = 0.0, dw_y = 0.0;     // high-excitation corrections (GHz)
    double omega_cr_x = 0.0, omega_cr_y = 0.0; // corrected frequencies (GHz)
    double g_cr_xy = 0.0; // coupling rebuilt from corrected detunings
    bool near_pole = false;
    bool dispersive = false;
};

// Everything at once; individual pieces below for targeted use.
EffectiveParams effective_params(const CircuitParams &params, double omega_x_ghz,
                                 double omega_y_ghz);

// Indirect coupling through one resonator:
// (1/2) g_lx g_ly (1/Delta_ly + 1/Delta_lx - 1/Sigma_ly - 1/Sigma_lx).
double indirect_coupling(const CircuitParams &params, const DetuningSet &d,
                         Resonator lambda, PoleGuard &guard);

// Effective qubit-qubit coupling: sum of both indirect terms plus g_xy.
double effective_coupling_g_d(const CircuitParams &params, double omega_x_ghz,
                              double omega_y_ghz);

// Corrected coupling: same formula with detunings rebuilt from the corrected
// qubit frequencies (resonators stay bare).
double corrected_coupling_g_cr(const CircuitParams &params, double omega_x_ghz,
                               double omega_y_ghz);

// Transformed nonlinear coefficients for qubit `beta` through resonator
// `lambda` (coefficients of the decoupled-frame operators):
//   self_kerr        : a'+a'+a a      g^2 alpha (1/Sigma^2 - 1/Delta^2)
//   cross_normal     : c'+c a'+a      2 g^2 alpha / Delta^2
//   cross_anti       : c c'+ a'+a     2 g^2 alpha / Sigma^2
//   residual_pair    : c'+c'+ a a     g^2 alpha / (2 Delta^2)
//   residual_exchange: c'+ a'+a a     g alpha / Delta
struct NonlinearTerms {
    double self_kerr = 0.0;
    double cross_normal = 0.0;
    double cross_anti = 0.0;
    double residual_pair = 0.0;
    double residual_exchange = 0.0;
};

NonlinearTerms nonlinear_terms(const CircuitParams &params, double omega_x_ghz,
                               double omega_y_ghz, Resonator lambda, Qubit beta);

// High-excitation frequency correction for one qubit: the average of the
// normal- and anti-ordered cross-Kerr coefficients summed over resonators,
// equal to sum_l g^2 alpha (1/Delta^2 + 1/Sigma^2).
double high_excited_shift(const CircuitParams &params, double omega_x_ghz,
                          double omega_y_ghz, Qubit beta);

// Generalized dispersive shift of the j-1 <-> j qubit transition caused by
// resonator `lambda`: chi_step(j) = j g^2 / (Delta + (j-1) alpha); zero for
// j == 0.  Throws pole_error at generalized resonances.
double chi_step(const CircuitParams &params, double omega_x_ghz,
                double omega_y_ghz, Resonator lambda, Qubit beta, int j);

// Lamb-type level shift kappa_j = chi_step(j).
double kappa_level(const CircuitParams &params, double omega_x_ghz,
                   double omega_y_ghz, Resonator lambda, Qubit beta, int j);

// State-dependent pull chi_j = chi_step(j) - chi_step(j+1), with the upper
// term dropped when level j+1 does not exist in a `levels`-state qubit.
double chi_state(const CircuitParams &params, double omega_x_ghz,
                 double omega_y_ghz, Resonator lambda, Qubit beta, int j,
                 int levels);

} // namespace drc
