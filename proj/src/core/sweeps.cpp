#include "core/sweeps.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "core/error.hpp"
#include "core/perturbation.hpp"
#include "core/spectrum.hpp"
#include "core/units.hpp"

namespace drc {

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        hw > 1 ? std::min<std::size_t>(hw, (n + 7) / 8) : 1;
    if (workers <= 1 || n < 16) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto run_chunk = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t i = begin; i < end; ++i) {
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error)
                        return;
                }
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end)
            break;
        threads.emplace_back(run_chunk, begin, end);
    }
    for (auto &t : threads)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    if (points < 2)
        throw std::invalid_argument("grid needs at least 2 points");
    if (!(lo < hi))
        throw std::invalid_argument("grid range must have lo < hi");
    std::vector<double> xs(points);
    for (std::size_t k = 0; k < points; ++k)
        xs[k] = lo + (hi - lo) * static_cast<double>(k) /
                         static_cast<double>(points - 1);
    return xs;
}

Dataset zz_sweep_dataset(const CircuitParams &params, double omega_x_ghz,
                         double lo_ghz, double hi_ghz, std::size_t points,
                         const ZZOptions &options, bool numeric,
                         const SpectrumOptions *numeric_options) {
    std::vector<std::string> columns = {"omega_y_ghz", "xi2_mhz", "xi3_mhz",
                                        "xi4s_mhz"};
    if (options.cross_kerr) {
        columns.push_back("xi4c0_mhz");
        columns.push_back("xi4c1_mhz");
    }
    columns.push_back("xi_total_mhz");
    columns.push_back("near_pole");
    if (numeric) {
        columns.push_back("zz_numeric_mhz");
        columns.push_back("zz_reliable");
    }

    const std::vector<double> grid = linspace(lo_ghz, hi_ghz, points);
    const SpectrumOptions numeric_opts =
        numeric_options ? *numeric_options : SpectrumOptions{};
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<std::vector<double>> rows(points);
    parallel_for(points, [&](std::size_t i) {
        const double wy = grid[i];
        std::vector<double> row;
        row.reserve(columns.size());
        row.push_back(wy);
        try {
            const ZZBreakdown b = zz_breakdown(params, omega_x_ghz, wy, options);
            row.push_back(ghz_to_mhz(b.xi2));
            row.push_back(ghz_to_mhz(b.xi3()));
            row.push_back(ghz_to_mhz(b.xi4s()));
            if (options.cross_kerr) {
                row.push_back(ghz_to_mhz(b.xi4c0()));
                row.push_back(ghz_to_mhz(b.xi4c1()));
            }
            row.push_back(ghz_to_mhz(b.xi_total));
            row.push_back(b.near_pole ? 1.0 : 0.0);
        } catch (const pole_error &) {
            const std::size_t nan_cols = options.cross_kerr ? 6 : 4;
            for (std::size_t c = 0; c < nan_cols; ++c)
                row.push_back(nan);
            row.push_back(1.0); // hard pole: flagged
        }
        if (numeric) {
            const ZZNumeric zn =
                zz_numeric(params, omega_x_ghz, wy, numeric_opts);
            row.push_back(ghz_to_mhz(zn.zz_ghz));
            row.push_back(zn.reliable ? 1.0 : 0.0);
        }
        rows[i] = std::move(row);
    });

    Dataset ds(columns);
    for (const auto &row : rows)
        ds.append_row(row);
    return ds;
}

Dataset spectrum_sweep_dataset(const CircuitParams &params, double phi_x,
                               double phi_lo, double phi_hi, std::size_t points,
                               std::size_t max_levels,
                               const SpectrumOptions &options) {
    const std::vector<double> grid = linspace(phi_lo, phi_hi, points);
    const double omega_x =
        flux_frequency(params.omega_x_max, params.alpha_x, phi_x);

    std::vector<Spectrum> spectra(points);
    parallel_for(points, [&](std::size_t i) {
        const double omega_y =
            flux_frequency(params.omega_y_max, params.alpha_y, grid[i]);
        spectra[i] = labeled_spectrum(params, omega_x, omega_y, options);
    });

    Dataset ds({"phi_x", "phi_y", "label", "energy_ghz", "overlap", "hybridized"});
    for (std::size_t i = 0; i < points; ++i) {
        const std::size_t count =
            max_levels == 0
                ? spectra[i].levels.size()
                : std::min(max_levels, spectra[i].levels.size());
        for (std::size_t k = 0; k < count; ++k) {
            const Level &lv = spectra[i].levels[k];
            const double label_numeric = 1000.0 * lv.occ.a + 100.0 * lv.occ.x +
                                         10.0 * lv.occ.y + lv.occ.b;
            ds.append_row({phi_x, grid[i], label_numeric, lv.energy_ghz,
                           lv.overlap, lv.hybridized ? 1.0 : 0.0});
            ds.set_text(ds.rows() - 1, 2, lv.occ.label());
        }
    }
    return ds;
}

Dataset coupling_sweep_dataset(const CircuitParams &params, double omega_x_ghz,
                               double phi_lo, double phi_hi, std::size_t points) {
    const std::vector<double> grid = linspace(phi_lo, phi_hi, points);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    struct Row {
        double omega_y, g_d, g_cr;
    };
    std::vector<Row> rows(points);
    parallel_for(points, [&](std::size_t i) {
        const double omega_y =
            flux_frequency(params.omega_y_max, params.alpha_y, grid[i]);
        Row r{omega_y, nan, nan};
        try {
            r.g_d = effective_coupling_g_d(params, omega_x_ghz, omega_y);
            r.g_cr = corrected_coupling_g_cr(params, omega_x_ghz, omega_y);
        } catch (const pole_error &) {
            // leave nan
        }
        rows[i] = r;
    });

    Dataset ds({"phi_y", "omega_y_ghz", "g_d_mhz", "g_cr_mhz"});
    for (std::size_t i = 0; i < points; ++i)
        ds.append_row({grid[i], rows[i].omega_y, ghz_to_mhz(rows[i].g_d),
                       ghz_to_mhz(rows[i].g_cr)});
    return ds;
}

namespace {

// Root scans probe functions that blow up at perturbation poles.  Turning a
// hard-pole evaluation into NaN (the same convention the dataset sweeps use)
// lets scan_roots discard the adjacent brackets, and makes a bisection that
// has cornered a pole crossing instead of a zero finish with a non-finite or
// oversized residual that filter_pole_crossings then rejects.
std::function<double(double)> nan_at_poles(std::function<double(double)> f) {
    return [f = std::move(f)](double x) {
        try {
            return f(x);
        } catch (const pole_error &) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
}

RootScan filter_pole_crossings(RootScan scan) {
    std::vector<RootResult> kept;
    kept.reserve(scan.roots.size());
    for (const RootResult &r : scan.roots) {
        if (std::isfinite(r.residual) && std::fabs(r.residual) <= kRootResidualGhz)
            kept.push_back(r);
        else
            ++scan.skipped_brackets;
    }
    scan.roots = std::move(kept);
    return scan;
}

} // namespace

RootScan find_switchoff(const CircuitParams &params, double omega_x_ghz,
                        SwitchoffTarget target, double lo_ghz, double hi_ghz,
                        std::size_t scan_points) {
    auto f = nan_at_poles([&params, omega_x_ghz, target](double omega_y) {
        return target == SwitchoffTarget::GD
                   ? effective_coupling_g_d(params, omega_x_ghz, omega_y)
                   : corrected_coupling_g_cr(params, omega_x_ghz, omega_y);
    });
    return filter_pole_crossings(scan_roots(f, lo_ghz, hi_ghz, scan_points));
}

std::vector<ContourChain> switchoff_contour(const CircuitParams &params,
                                            SwitchoffTarget target,
                                            double phi_lo, double phi_hi,
                                            std::size_t grid) {
    const std::vector<double> phis = linspace(phi_lo, phi_hi, grid);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<std::vector<double>> values(grid, std::vector<double>(grid));
    parallel_for(grid, [&](std::size_t i) {
        const double omega_x =
            flux_frequency(params.omega_x_max, params.alpha_x, phis[i]);
        for (std::size_t j = 0; j < grid; ++j) {
            const double omega_y =
                flux_frequency(params.omega_y_max, params.alpha_y, phis[j]);
            try {
                values[i][j] = target == SwitchoffTarget::GD
                                   ? effective_coupling_g_d(params, omega_x, omega_y)
                                   : corrected_coupling_g_cr(params, omega_x,
                                                             omega_y);
            } catch (const pole_error &) {
                values[i][j] = nan;
            } catch (const std::domain_error &) {
                values[i][j] = nan;
            }
        }
    });
    return marching_squares(phis, phis, values);
}

RootScan find_zz_zero(const CircuitParams &params, double omega_x_ghz,
                      double lo_ghz, double hi_ghz, std::size_t scan_points,
                      const ZZOptions &options) {
    const std::vector<double> poles =
        zz_pole_catalog(params, omega_x_ghz, lo_ghz, hi_ghz);
    auto skip = [&poles](double a, double b) {
        for (double p : poles)
            if (a <= p && p <= b)
                return true;
        return false;
    };
    auto f = nan_at_poles([&params, omega_x_ghz, &options](double omega_y) {
        return zz_breakdown(params, omega_x_ghz, omega_y, options).xi_total;
    });
    return filter_pole_crossings(scan_roots(f, lo_ghz, hi_ghz, scan_points, skip));
}

Dataset roots_dataset(const RootScan &scan) {
    Dataset ds({"omega_y_ghz", "bracket_lo_ghz", "bracket_hi_ghz", "residual_ghz"});
    for (const RootResult &r : scan.roots)
        ds.append_row({r.root, r.bracket_lo, r.bracket_hi, r.residual});
    return ds;
}

Dataset contour_dataset(const std::vector<ContourChain> &chains) {
    Dataset ds({"chain", "phi_x", "phi_y"});
    for (std::size_t c = 0; c < chains.size(); ++c)
        for (const auto &pt : chains[c].points)
            ds.append_row({static_cast<double>(c), pt.first, pt.second});
    return ds;
}

} // namespace drc
