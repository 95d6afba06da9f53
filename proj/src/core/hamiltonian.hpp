// Truncated multilevel Hamiltonian of the four-mode circuit in the product
// basis |m_a m_x m_y m_b> (mode order a, x, y, b; index of b fastest).
#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "core/params.hpp"

namespace drc {

enum class Convention {
    Uniform, // equal neighbour matrix elements on qubit ladders (default)
    Bosonic  // sqrt(n) harmonic-oscillator matrix elements
};

struct Truncation {
    int n_a = 4, n_x = 3, n_y = 3, n_b = 4;

    int dim() const { return n_a * n_x * n_y * n_b; }
    // Throws std::invalid_argument outside 2..9 levels per mode (labels are
    // single digits) or when the product exceeds 4096 states.
    void validate() const;
};

struct Occupation {
    int a = 0, x = 0, y = 0, b = 0;

    bool operator==(const Occupation &o) const {
        return a == o.a && x == o.x && y == o.y && b == o.b;
    }
    int total() const { return a + x + y + b; }
    // Digit string in mode order, e.g. "0110" for one excitation in each qubit.
    std::string label() const;
};

// Row-major flat index with mode order (a, x, y, b), b fastest.
int flat_index(const Truncation &t, const Occupation &occ);
Occupation occupation_of(const Truncation &t, int index);

struct SpectrumOptions {
    Truncation trunc;
    Convention convention = Convention::Uniform;
    bool rwa = false; // drop counter-rotating (double-(de)excitation) terms
};

// Dense real-symmetric Hamiltonian at instantaneous qubit frequencies
// (omega_x, omega_y).  Mode energies are omega*m + alpha*m*(m-1)/2 (alpha = 0
// for resonators); every pair couples as g*(R_i - L_i)(L_j - R_j) with R/L
// the raising/lowering ladders, which keeps the single-exchange terms at +g
// and the double-(de)excitation terms at -g.  Under RWA only the exchange
// terms remain.
Eigen::MatrixXd build_hamiltonian(const CircuitParams &params, double omega_x_ghz,
                                  double omega_y_ghz, const SpectrumOptions &options);

} // namespace drc
