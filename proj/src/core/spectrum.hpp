// Exact diagonalization of the truncated Hamiltonian, bare-state labeling,
// and the numeric static-ZZ shift.
#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "core/hamiltonian.hpp"

namespace drc {

struct Level {
    double energy_ghz = 0.0;
    double overlap = 0.0;  // |<label|eigenvector>|^2
    Occupation occ;        // assigned bare label
    bool hybridized = false; // overlap < 0.5
};

struct Spectrum {
    std::vector<Level> levels;   // ascending energy; one per basis state
    Eigen::VectorXd energies;    // same order
    Eigen::MatrixXd vectors;     // column k belongs to levels[k]
    Truncation trunc;

    // Level currently labeled `occ`; nullopt when occ is out of range.
    std::optional<Level> find(const Occupation &occ) const;
};

// Diagonalize and label.  Labels are assigned greedily in ascending energy
// order: each eigenvector takes the not-yet-used basis state on which it has
// the largest weight; `hybridized` marks assignments below 0.5 weight.
Spectrum labeled_spectrum(const CircuitParams &params, double omega_x_ghz,
                          double omega_y_ghz, const SpectrumOptions &options);

struct ZZNumeric {
    double zz_ghz = 0.0;
    bool reliable = false; // false when any of the four states is hybridized
};

// E(0110) - E(0100) - E(0010) + E(0000) from labeled levels.
ZZNumeric zz_numeric(const CircuitParams &params, double omega_x_ghz,
                     double omega_y_ghz, const SpectrumOptions &options);

// Energy gap between the two eigenstates carrying the most weight on
// span{|occ1>, |occ2>}; used to measure avoided crossings where the two bare
// states hybridize beyond labeling.
double pair_gap_ghz(const CircuitParams &params, double omega_x_ghz,
                    double omega_y_ghz, const Occupation &occ1,
                    const Occupation &occ2, const SpectrumOptions &options);

// Labeled spectra along a phi_y sweep at fixed phi_x (qubit frequencies from
// the flux law), plus eigenvector-continuity tracking between neighbouring
// grid points.  `track[k][c]` is the level index at point k of the curve that
// started as level index c at point 0; `coarse_grid` is set when any
// consecutive match has squared overlap below 0.7.
struct LevelSweep {
    std::vector<double> phi;
    std::vector<double> omega_x, omega_y;
    std::vector<Spectrum> points;
    std::vector<std::vector<int>> track;
    bool coarse_grid = false;
};

LevelSweep sweep_levels(const CircuitParams &params, double phi_x, double phi_lo,
                        double phi_hi, std::size_t count,
                        const SpectrumOptions &options);

} // namespace drc
