// Circuit-level construction: capacitance network, lumped-element mode
// frequencies, and the coupling strengths they induce.
#pragma once

#include <Eigen/Dense>

#include "core/params.hpp"

namespace drc {

// Self and mutual capacitances (fF) of the four-node network plus the
// lumped-element data needed to produce mode frequencies: resonator
// inductances (nH) and qubit Josephson energies (GHz, i.e. E_J/h).
struct CapacitanceNetwork {
    double C_a = 0.0, C_b = 0.0, C_x = 0.0, C_y = 0.0;     // self (fF)
    double C_ab = 0.0, C_xy = 0.0;                         // mutual (fF)
    double C_ax = 0.0, C_ay = 0.0, C_bx = 0.0, C_by = 0.0; // mutual (fF)
    double L_a = 0.0, L_b = 0.0;                           // nH
    double EJ_x = 0.0, EJ_y = 0.0;                         // GHz

    // Throws std::domain_error when self capacitances, inductances, or
    // Josephson energies are non-positive or mutuals negative.
    void validate_capacitances() const;
    void validate_elements() const;
};

// --- scalar element relations -------------------------------------------

// Charging energy E_C/h in GHz for a total capacitance in fF: e^2/(2C)/h.
double charging_energy_ghz(double c_fF);

// Transmon 0->1 frequency in GHz: sqrt(8*EJ*EC) - EC (both in GHz).
// `shallow` (optional) is set when EJ/EC < 20 (reduced-accuracy regime).
double qubit_frequency_ghz(double ej_ghz, double ec_ghz, bool *shallow = nullptr);

// Inverse of qubit_frequency_ghz at fixed EC: the EJ reproducing `omega`.
double ej_for_frequency_ghz(double omega_ghz, double ec_ghz);

// LC resonance in GHz for L in nH and C in fF: 1/(2*pi*sqrt(LC)).
double resonator_frequency_ghz(double l_nH, double c_fF);

// --- network matrix -------------------------------------------------------

// Maxwell capacitance matrix in node order (a, b, x, y), fF units.
Eigen::Matrix4d capacitance_matrix(const CapacitanceNetwork &net);

// Exact inverse of the capacitance matrix (1/fF).
Eigen::Matrix4d capacitance_inverse_exact(const CapacitanceNetwork &net);

// Leading-order adjugate entries (products of three capacitances, keeping
// terms first order in the mutuals), fF^3 units.
Eigen::Matrix4d capacitance_adjugate_approx(const CapacitanceNetwork &net);

// Approximate inverse: adjugate_approx / (C_a*C_b*C_x*C_y).
Eigen::Matrix4d capacitance_inverse_approx(const CapacitanceNetwork &net);

// --- induced couplings -----------------------------------------------------

// Qubit-resonator coupling: (1/2) * C_lb/sqrt(C_l*C_b) * sqrt(w_l*w_b).
double coupling_qr_ghz(double c_mutual_fF, double c_l_fF, double c_b_fF,
                       double omega_l_ghz, double omega_b_ghz);

// Resonator-resonator coupling with the qubit-mediated enhancement bracket:
// (1/2) * (C_ab/sqrt(C_a*C_b)) * (1 + C_ax*C_bx/(C_x*C_ab)
//                                  + C_ay*C_by/(C_y*C_ab)) * sqrt(w_a*w_b).
double coupling_ab_ghz(const CapacitanceNetwork &net, double omega_a_ghz,
                       double omega_b_ghz);

// Qubit-qubit coupling with the resonator-mediated enhancement bracket:
// (1/2) * (C_xy/sqrt(C_x*C_y)) * (1 + C_ax*C_ay/(C_a*C_xy)
//                                  + C_bx*C_by/(C_b*C_xy)) * sqrt(w_x*w_y).
double coupling_xy_ghz(const CapacitanceNetwork &net, double omega_x_ghz,
                       double omega_y_ghz);

// Full derivation: frequencies from (L, C, EJ), anharmonicities -E_C/h, and
// all six couplings.  Hierarchy/ordering diagnostics land in `warnings`.
CircuitParams params_from_network(const CapacitanceNetwork &net);

} // namespace drc
