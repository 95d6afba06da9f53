#include "core/figures.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <stdexcept>

#include "core/error.hpp"
#include "core/perturbation.hpp"
#include "core/spectrum.hpp"
#include "core/sweeps.hpp"
#include "core/units.hpp"
#include "core/zz.hpp"

namespace drc {

namespace {

constexpr double kPhiLo = -1.55, kPhiHi = 1.55;
constexpr std::size_t kGrid1D = 1001;
constexpr std::size_t kGrid2D = 201;
const double kNan = std::numeric_limits<double>::quiet_NaN();

CircuitParams with_gxy(const CircuitParams &base, double g_xy_mhz) {
    CircuitParams p = base;
    p.g_xy = mhz_to_ghz(g_xy_mhz);
    p.validate();
    return p;
}

// One row per labeled level with total occupation in [min_total, max_total].
void spectrum_rows(Dataset &ds, const CircuitParams &params, double phi_x,
                   double phi_y, int min_total, int max_total,
                   const SpectrumOptions &options) {
    const double omega_x =
        flux_frequency(params.omega_x_max, params.alpha_x, phi_x);
    const double omega_y =
        flux_frequency(params.omega_y_max, params.alpha_y, phi_y);
    const Spectrum sp = labeled_spectrum(params, omega_x, omega_y, options);
    for (const Level &lv : sp.levels) {
        const int total = lv.occ.total();
        if (total < min_total || total > max_total)
            continue;
        const double label_numeric = 1000.0 * lv.occ.a + 100.0 * lv.occ.x +
                                     10.0 * lv.occ.y + lv.occ.b;
        ds.append_row({phi_x, phi_y, label_numeric, lv.energy_ghz, lv.overlap,
                       lv.hybridized ? 1.0 : 0.0});
        ds.set_text(ds.rows() - 1, 2, lv.occ.label());
    }
}

Dataset spectrum_grid_dataset(const CircuitParams &params,
                              const std::vector<double> &phi_x_values,
                              const std::vector<double> &phi_y_values,
                              int min_total, int max_total,
                              const SpectrumOptions &options) {
    Dataset ds({"phi_x", "phi_y", "label", "energy_ghz", "overlap", "hybridized"});
    for (double px : phi_x_values)
        for (double py : phi_y_values)
            spectrum_rows(ds, params, px, py, min_total, max_total, options);
    return ds;
}

// Copies rows of `src` into `dst` with a constant extra leading column.
// Text cells (none in the copied schemas) are not carried over.
void append_with_prefix(Dataset &dst, double prefix, const Dataset &src) {
    for (std::size_t r = 0; r < src.rows(); ++r) {
        std::vector<double> row;
        row.reserve(src.cols() + 1);
        row.push_back(prefix);
        for (std::size_t c = 0; c < src.cols(); ++c)
            row.push_back(src.cell(r, c));
        dst.append_row(row);
    }
}

std::vector<std::string> prefixed_columns(const char *prefix_name,
                                          const Dataset &src) {
    std::vector<std::string> cols{prefix_name};
    for (std::size_t c = 0; c < src.cols(); ++c)
        cols.push_back(src.column_name(c));
    return cols;
}

// g_cr vs omega_y curves for a family of g_xy values (one dataset).
Dataset gcr_family_dataset(const CircuitParams &base, double omega_x,
                           const std::vector<double> &g_xy_mhz, double lo,
                           double hi) {
    Dataset ds({"g_xy_mhz", "omega_y_ghz", "g_cr_mhz"});
    const std::vector<double> grid = linspace(lo, hi, kGrid1D);
    for (double gm : g_xy_mhz) {
        const CircuitParams p = with_gxy(base, gm);
        std::vector<double> gcr(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            try {
                gcr[i] = corrected_coupling_g_cr(p, omega_x, grid[i]);
            } catch (const pole_error &) {
                gcr[i] = kNan;
            }
        });
        for (std::size_t i = 0; i < grid.size(); ++i)
            ds.append_row({gm, grid[i], ghz_to_mhz(gcr[i])});
    }
    return ds;
}

// Analytic ZZ sweeps for a family of g_xy values (one dataset).
Dataset zz_family_dataset(const CircuitParams &base, double omega_x,
                          const std::vector<double> &g_xy_mhz, double lo,
                          double hi, const ZZOptions &options) {
    const Dataset first = zz_sweep_dataset(with_gxy(base, g_xy_mhz.front()),
                                           omega_x, lo, hi, kGrid1D, options);
    Dataset ds(prefixed_columns("g_xy_mhz", first));
    append_with_prefix(ds, g_xy_mhz.front(), first);
    for (std::size_t k = 1; k < g_xy_mhz.size(); ++k) {
        const Dataset d = zz_sweep_dataset(with_gxy(base, g_xy_mhz[k]), omega_x,
                                           lo, hi, kGrid1D, options);
        append_with_prefix(ds, g_xy_mhz[k], d);
    }
    return ds;
}

// 2D g_d surface over the flux plane: phi_x, phi_y, g_d_mhz.
Dataset gd_surface_dataset(const CircuitParams &params) {
    const std::vector<double> phis = linspace(kPhiLo, kPhiHi, kGrid2D);
    std::vector<std::vector<double>> values(kGrid2D,
                                            std::vector<double>(kGrid2D));
    parallel_for(kGrid2D, [&](std::size_t i) {
        const double wx =
            flux_frequency(params.omega_x_max, params.alpha_x, phis[i]);
        for (std::size_t j = 0; j < kGrid2D; ++j) {
            const double wy =
                flux_frequency(params.omega_y_max, params.alpha_y, phis[j]);
            try {
                values[i][j] = effective_coupling_g_d(params, wx, wy);
            } catch (const pole_error &) {
                values[i][j] = kNan;
            }
        }
    });
    Dataset ds({"phi_x", "phi_y", "g_d_mhz"});
    for (std::size_t i = 0; i < kGrid2D; ++i)
        for (std::size_t j = 0; j < kGrid2D; ++j)
            ds.append_row({phis[i], phis[j], ghz_to_mhz(values[i][j])});
    return ds;
}

std::string write(const Dataset &ds, const std::filesystem::path &dir,
                  const char *name) {
    const std::string path = (dir / name).string();
    ds.write_csv(path);
    return path;
}

std::vector<std::string> fig2(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    Dataset ds = spectrum_grid_dataset(base, {0.0},
                                       linspace(kPhiLo, kPhiHi, kGrid1D), 0, 2,
                                       SpectrumOptions{});
    return {write(ds, dir, "fig2.csv")};
}

std::vector<std::string> fig3(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    std::vector<std::string> paths;
    const CircuitParams strong = with_gxy(base, 3.0);
    const CircuitParams off = with_gxy(base, 0.0);
    paths.push_back(write(gd_surface_dataset(strong), dir, "fig3a.csv"));
    paths.push_back(write(
        contour_dataset(switchoff_contour(strong, SwitchoffTarget::GD, kPhiLo,
                                          kPhiHi, kGrid2D)),
        dir, "fig3a_contour.csv"));
    paths.push_back(write(gd_surface_dataset(off), dir, "fig3c.csv"));
    paths.push_back(write(
        contour_dataset(switchoff_contour(off, SwitchoffTarget::GD, kPhiLo,
                                          kPhiHi, kGrid2D)),
        dir, "fig3c_contour.csv"));

    // Diagonal cut phi_x = phi_y: bare and decoupled qubit frequencies.
    Dataset diag({"phi", "omega_x_ghz", "omega_y_ghz", "omega_d_x_ghz",
                  "omega_d_y_ghz"});
    for (double phi : linspace(kPhiLo, kPhiHi, kGrid1D)) {
        const double wx = flux_frequency(base.omega_x_max, base.alpha_x, phi);
        const double wy = flux_frequency(base.omega_y_max, base.alpha_y, phi);
        double wdx = kNan, wdy = kNan;
        try {
            const EffectiveParams eff = effective_params(base, wx, wy);
            wdx = eff.omega_d_x;
            wdy = eff.omega_d_y;
        } catch (const pole_error &) {
        }
        diag.append_row({phi, wx, wy, wdx, wdy});
    }
    paths.push_back(write(diag, dir, "fig3bd.csv"));
    return paths;
}

std::vector<std::string> fig4(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    std::vector<std::string> paths;
    const double idle_y = flux_frequency(base.omega_y_max, base.alpha_y, 0.0);
    const double idle_x = flux_frequency(base.omega_x_max, base.alpha_x, 0.0);

    Dataset a({"phi_x", "omega_x_ghz", "omega_d_x_ghz", "omega_cr_x_ghz",
               "delta_omega_x_mhz"});
    for (double phi : linspace(kPhiLo, kPhiHi, kGrid1D)) {
        const double wx = flux_frequency(base.omega_x_max, base.alpha_x, phi);
        double wd = kNan, wcr = kNan, dw = kNan;
        try {
            const EffectiveParams eff = effective_params(base, wx, idle_y);
            wd = eff.omega_d_x;
            wcr = eff.omega_cr_x;
            dw = ghz_to_mhz(eff.dw_x);
        } catch (const pole_error &) {
        }
        a.append_row({phi, wx, wd, wcr, dw});
    }
    paths.push_back(write(a, dir, "fig4a.csv"));

    Dataset b({"phi_y", "omega_y_ghz", "omega_d_y_ghz", "omega_cr_y_ghz",
               "delta_omega_y_mhz"});
    for (double phi : linspace(kPhiLo, kPhiHi, kGrid1D)) {
        const double wy = flux_frequency(base.omega_y_max, base.alpha_y, phi);
        double wd = kNan, wcr = kNan, dw = kNan;
        try {
            const EffectiveParams eff = effective_params(base, idle_x, wy);
            wd = eff.omega_d_y;
            wcr = eff.omega_cr_y;
            dw = ghz_to_mhz(eff.dw_y);
        } catch (const pole_error &) {
        }
        b.append_row({phi, wy, wd, wcr, dw});
    }
    paths.push_back(write(b, dir, "fig4b.csv"));

    const CircuitParams cd = with_gxy(base, 1.0);
    paths.push_back(write(
        coupling_sweep_dataset(cd, idle_x, kPhiLo, kPhiHi, kGrid1D), dir,
        "fig4cd.csv"));
    return paths;
}

std::vector<std::string> fig5(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    std::vector<std::string> paths;
    const std::vector<double> phis = linspace(kPhiLo, kPhiHi, kGrid1D);

    Dataset a({"g_xy_mhz", "omega_x_ghz", "phi_y", "omega_y_ghz", "g_cr_mhz"});
    for (double gm : {0.0, 0.5, 1.0}) {
        const CircuitParams p = with_gxy(base, gm);
        for (double wx : {4.56, 4.53}) {
            for (double phi : phis) {
                const double wy =
                    flux_frequency(p.omega_y_max, p.alpha_y, phi);
                double gcr = kNan;
                try {
                    gcr = corrected_coupling_g_cr(p, wx, wy);
                } catch (const pole_error &) {
                }
                a.append_row({gm, wx, phi, wy, ghz_to_mhz(gcr)});
            }
        }
    }
    paths.push_back(write(a, dir, "fig5a.csv"));

    Dataset b({"alpha_y_mhz", "phi_y", "omega_y_ghz", "g_cr_mhz"});
    for (double am : {-190.0, -195.0, -200.0}) {
        CircuitParams p = with_gxy(base, 0.5);
        p.alpha_y = mhz_to_ghz(am);
        p.validate();
        for (double phi : phis) {
            const double wy = flux_frequency(p.omega_y_max, p.alpha_y, phi);
            double gcr = kNan;
            try {
                gcr = corrected_coupling_g_cr(p, 4.56, wy);
            } catch (const pole_error &) {
            }
            b.append_row({am, phi, wy, ghz_to_mhz(gcr)});
        }
    }
    paths.push_back(write(b, dir, "fig5b.csv"));
    return paths;
}

std::vector<std::string> fig6(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    const std::vector<double> family{0.0, 0.5, 1.0, 1.5};
    ZZOptions ladder;
    ladder.cross_kerr = false;
    return {
        write(gcr_family_dataset(base, 4.52, family, 4.7, 5.0), dir, "fig6a.csv"),
        write(zz_family_dataset(base, 4.52, family, 4.7, 5.0, ladder), dir,
              "fig6b.csv"),
    };
}

std::vector<std::string> fig7(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    const std::vector<double> family{0.9, 1.0, 1.2, 1.6};
    ZZOptions ladder;
    ladder.cross_kerr = false;
    return {
        write(gcr_family_dataset(base, 4.0, family, 4.1, 5.0), dir, "fig7a.csv"),
        write(zz_family_dataset(base, 4.0, family, 4.1, 5.0, ladder), dir,
              "fig7b.csv"),
        write(gcr_family_dataset(base, 3.95, family, 4.1, 5.0), dir,
              "fig7c.csv"),
        write(zz_family_dataset(base, 3.95, family, 4.1, 5.0, ladder), dir,
              "fig7d.csv"),
    };
}

std::vector<std::string> fig9(const CircuitParams &base,
                              const std::filesystem::path &dir) {
    const std::vector<double> family{0.2, 1.4, 2.0};
    const ZZOptions full; // cross-Kerr on
    return {
        write(gcr_family_dataset(base, 4.52, family, 4.7, 5.0), dir, "fig9a.csv"),
        write(zz_family_dataset(base, 4.52, family, 4.7, 5.0, full), dir,
              "fig9b.csv"),
    };
}

std::vector<std::string> fig10(const CircuitParams &base,
                               const std::filesystem::path &dir) {
    const std::vector<double> phis = linspace(kPhiLo, kPhiHi, 61);
    return {
        write(spectrum_grid_dataset(base, phis, phis, 1, 1, SpectrumOptions{}),
              dir, "fig10_single.csv"),
        write(spectrum_grid_dataset(base, phis, phis, 2, 2, SpectrumOptions{}),
              dir, "fig10_double.csv"),
    };
}

} // namespace

const std::vector<std::string> &figure_names() {
    static const std::vector<std::string> names = {
        "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig9", "fig10"};
    return names;
}

std::vector<std::string> write_figure(const CircuitParams &base,
                                      const std::string &name,
                                      const std::string &out_dir) {
    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create output directory: " + out_dir);

    if (name == "fig2")
        return fig2(base, dir);
    if (name == "fig3")
        return fig3(base, dir);
    if (name == "fig4")
        return fig4(base, dir);
    if (name == "fig5")
        return fig5(base, dir);
    if (name == "fig6")
        return fig6(base, dir);
    if (name == "fig7")
        return fig7(base, dir);
    if (name == "fig9")
        return fig9(base, dir);
    if (name == "fig10")
        return fig10(base, dir);
    throw std::invalid_argument("unknown figure name '" + name +
                                "' (expected one of fig2, fig3, fig4, fig5, "
                                "fig6, fig7, fig9, fig10)");
}

} // namespace drc
