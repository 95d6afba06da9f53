#include "core/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "core/units.hpp"

namespace drc {

std::optional<Level> Spectrum::find(const Occupation &occ) const {
    for (const Level &l : levels)
        if (l.occ == occ)
            return l;
    return std::nullopt;
}

Spectrum labeled_spectrum(const CircuitParams &params, double omega_x_ghz,
                          double omega_y_ghz, const SpectrumOptions &options) {
    const Eigen::MatrixXd h =
        build_hamiltonian(params, omega_x_ghz, omega_y_ghz, options);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");

    Spectrum s;
    s.trunc = options.trunc;
    s.energies = solver.eigenvalues();
    s.vectors = solver.eigenvectors();

    const int dim = options.trunc.dim();
    std::vector<bool> used(dim, false);
    s.levels.reserve(dim);
    for (int k = 0; k < dim; ++k) {
        int best = -1;
        double best_w = -1.0;
        for (int i = 0; i < dim; ++i) {
            if (used[i])
                continue;
            const double w = s.vectors(i, k) * s.vectors(i, k);
            if (w > best_w) {
                best_w = w;
                best = i;
            }
        }
        used[best] = true;
        Level l;
        l.energy_ghz = s.energies(k);
        l.overlap = best_w;
        l.occ = occupation_of(options.trunc, best);
        l.hybridized = best_w < 0.5;
        s.levels.push_back(l);
    }
    return s;
}

ZZNumeric zz_numeric(const CircuitParams &params, double omega_x_ghz,
                     double omega_y_ghz, const SpectrumOptions &options) {
    const Spectrum s = labeled_spectrum(params, omega_x_ghz, omega_y_ghz, options);
    const auto e00 = s.find(Occupation{0, 0, 0, 0});
    const auto e10 = s.find(Occupation{0, 1, 0, 0});
    const auto e01 = s.find(Occupation{0, 0, 1, 0});
    const auto e11 = s.find(Occupation{0, 1, 1, 0});
    if (!e00 || !e10 || !e01 || !e11)
        throw std::runtime_error("computational states missing from labeling");
    ZZNumeric out;
    out.zz_ghz = e11->energy_ghz - e10->energy_ghz - e01->energy_ghz + e00->energy_ghz;
    out.reliable = !(e00->hybridized || e10->hybridized || e01->hybridized ||
                     e11->hybridized);
    return out;
}

double pair_gap_ghz(const CircuitParams &params, double omega_x_ghz,
                    double omega_y_ghz, const Occupation &occ1,
                    const Occupation &occ2, const SpectrumOptions &options) {
    const Spectrum s = labeled_spectrum(params, omega_x_ghz, omega_y_ghz, options);
    const int i1 = flat_index(options.trunc, occ1);
    const int i2 = flat_index(options.trunc, occ2);
    const int dim = options.trunc.dim();
    int first = -1, second = -1;
    double w_first = -1.0, w_second = -1.0;
    for (int k = 0; k < dim; ++k) {
        const double w = s.vectors(i1, k) * s.vectors(i1, k) +
                         s.vectors(i2, k) * s.vectors(i2, k);
        if (w > w_first) {
            second = first;
            w_second = w_first;
            first = k;
            w_first = w;
        } else if (w > w_second) {
            second = k;
            w_second = w;
        }
    }
    return std::fabs(s.energies(first) - s.energies(second));
}

LevelSweep sweep_levels(const CircuitParams &params, double phi_x, double phi_lo,
                        double phi_hi, std::size_t count,
                        const SpectrumOptions &options) {
    if (count < 2)
        throw std::invalid_argument("sweep needs at least 2 points");
    if (!(phi_lo < phi_hi))
        throw std::invalid_argument("sweep range must have lo < hi");

    LevelSweep sweep;
    const double omega_x = flux_frequency(params.omega_x_max, params.alpha_x, phi_x);
    const int dim = options.trunc.dim();
    sweep.phi.resize(count);
    sweep.omega_x.assign(count, omega_x);
    sweep.omega_y.resize(count);
    sweep.points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double phi =
            phi_lo + (phi_hi - phi_lo) * static_cast<double>(k) /
                         static_cast<double>(count - 1);
        sweep.phi[k] = phi;
        sweep.omega_y[k] =
            flux_frequency(params.omega_y_max, params.alpha_y, phi);
        sweep.points.push_back(
            labeled_spectrum(params, omega_x, sweep.omega_y[k], options));
    }

    // Continuity tracking: follow each curve by maximum squared overlap of
    // consecutive eigenvectors.
    sweep.track.assign(count, std::vector<int>(dim));
    for (int c = 0; c < dim; ++c)
        sweep.track[0][c] = c;
    for (std::size_t k = 1; k < count; ++k) {
        const Eigen::MatrixXd overlap =
            sweep.points[k - 1].vectors.transpose() * sweep.points[k].vectors;
        std::vector<bool> used(dim, false);
        for (int c = 0; c < dim; ++c) {
            const int prev = sweep.track[k - 1][c];
            int best = -1;
            double best_w = -1.0;
            for (int j = 0; j < dim; ++j) {
                if (used[j])
                    continue;
                const double w = overlap(prev, j) * overlap(prev, j);
                if (w > best_w) {
                    best_w = w;
                    best = j;
                }
            }
            used[best] = true;
            sweep.track[k][c] = best;
            if (best_w < 0.7)
                sweep.coarse_grid = true;
        }
    }
    return sweep;
}

} // namespace drc
