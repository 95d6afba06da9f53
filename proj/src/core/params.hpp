// Device parameter set: two fixed resonators (a, b), two flux-tunable qubits
// (x, y), six pairwise coupling strengths, and the flux tuning law.
#pragma once

#include <string>
#include <vector>

namespace drc {

struct CircuitParams {
    // Mode frequencies (GHz).  Qubit values are the zero-flux maxima; the
    // instantaneous qubit frequencies are arguments of the evaluation calls.
    double omega_a = 0.0;
    double omega_b = 0.0;
    double omega_x_max = 0.0;
    double omega_y_max = 0.0;

    // Qubit anharmonicities (GHz, negative).
    double alpha_x = 0.0;
    double alpha_y = 0.0;

    // Pairwise couplings (GHz).
    double g_ax = 0.0;
    double g_ay = 0.0;
    double g_bx = 0.0;
    double g_by = 0.0;
    double g_xy = 0.0;
    double g_ab = 0.0;

    // Non-blocking diagnostics collected by validate().
    std::vector<std::string> warnings;

    // The baseline device used by the docs, tests, and figure recipes.
    static CircuitParams baseline();

    // Throws std::domain_error on unphysical values (non-positive frequency,
    // non-negative anharmonicity, negative coupling); refreshes `warnings`
    // (coupling-scale hierarchy, frequency ordering).
    void validate();
};

// Flux tuning law for a qubit with zero-flux maximum `omega_max` and
// anharmonicity `alpha` (negative): omega(phi) = (omega_max + |alpha|) *
// sqrt(|cos phi|) - |alpha|.  Defined for all phi; monotone on [0, pi/2).
double flux_frequency(double omega_max_ghz, double alpha_ghz, double phi);

// Principal-branch inverse of flux_frequency: phi in [0, pi/2) such that
// flux_frequency(phi) == omega.  Throws std::domain_error when omega exceeds
// the maximum or is at/below the large-flux limit -|alpha|.
double flux_for_frequency(double omega_max_ghz, double alpha_ghz, double omega_ghz);

} // namespace drc
