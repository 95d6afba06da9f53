// C ABI wrapper over the C++ core: opaque handles, status codes, and a
// thread-local error message.  No exception crosses this boundary.
#include "drcoupler.h"

#include <cstring>
#include <exception>
#include <map>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "core/config.hpp"
#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/figures.hpp"
#include "core/hamiltonian.hpp"
#include "core/params.hpp"
#include "core/perturbation.hpp"
#include "core/spectrum.hpp"
#include "core/sweeps.hpp"
#include "core/validate.hpp"
#include "core/zz.hpp"

struct drc_params {
    drc::CircuitParams p;
};

struct drc_dataset {
    drc::Dataset d;
    // Rendered-cell storage backing drc_dataset_cell_text pointers.
    std::map<std::pair<size_t, size_t>, std::string> rendered;

    explicit drc_dataset(drc::Dataset ds) : d(std::move(ds)) {}
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string &message) { t_last_error = message; }

template <typename F>
drc_status guarded(F &&fn) {
    try {
        return fn();
    } catch (const drc::parse_error &e) {
        set_error(e.what());
        return DRC_ERR_PARSE;
    } catch (const drc::io_error &e) {
        set_error(e.what());
        return DRC_ERR_IO;
    } catch (const drc::pole_error &e) {
        set_error(e.what());
        return DRC_ERR_NUMERIC;
    } catch (const std::invalid_argument &e) {
        set_error(e.what());
        return DRC_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error &e) {
        set_error(e.what());
        return DRC_ERR_DOMAIN;
    } catch (const std::bad_alloc &) {
        set_error("out of memory");
        return DRC_ERR_NUMERIC;
    } catch (const std::exception &e) {
        set_error(e.what());
        return DRC_ERR_NUMERIC;
    } catch (...) {
        set_error("unknown failure");
        return DRC_ERR_NUMERIC;
    }
}

drc_status require(bool ok, const char *message) {
    if (!ok) {
        set_error(message);
        return DRC_ERR_INVALID_ARGUMENT;
    }
    return DRC_OK;
}

drc::SpectrumOptions convert_spectrum_options(const drc_spectrum_options *opt) {
    drc::SpectrumOptions o;
    if (!opt)
        return o;
    if (opt->n_a)
        o.trunc.n_a = opt->n_a;
    if (opt->n_x)
        o.trunc.n_x = opt->n_x;
    if (opt->n_y)
        o.trunc.n_y = opt->n_y;
    if (opt->n_b)
        o.trunc.n_b = opt->n_b;
    switch (opt->convention) {
    case DRC_CONVENTION_UNIFORM:
        o.convention = drc::Convention::Uniform;
        break;
    case DRC_CONVENTION_BOSONIC:
        o.convention = drc::Convention::Bosonic;
        break;
    default:
        throw std::invalid_argument("unknown ladder convention");
    }
    o.rwa = opt->rwa != 0;
    o.trunc.validate();
    return o;
}

drc::ZZOptions convert_zz_options(const drc_zz_options *opt) {
    drc::ZZOptions o; // defaults: cross-Kerr on, asymmetric third order
    if (opt) {
        o.cross_kerr = opt->cross_kerr != 0;
        o.xi3_symmetrized = opt->xi3_symmetrized != 0;
    }
    return o;
}

drc::SwitchoffTarget convert_target(int target) {
    if (target == DRC_SWITCHOFF_G_D)
        return drc::SwitchoffTarget::GD;
    if (target == DRC_SWITCHOFF_G_CR)
        return drc::SwitchoffTarget::GCR;
    throw std::invalid_argument("unknown switch-off target");
}

drc_status emit_dataset(drc::Dataset ds, drc_dataset **out) {
    *out = new drc_dataset(std::move(ds));
    return DRC_OK;
}

} // namespace

extern "C" {

const char *drc_status_name(drc_status status) {
    switch (status) {
    case DRC_OK:
        return "DRC_OK";
    case DRC_ERR_INVALID_ARGUMENT:
        return "DRC_ERR_INVALID_ARGUMENT";
    case DRC_ERR_PARSE:
        return "DRC_ERR_PARSE";
    case DRC_ERR_DOMAIN:
        return "DRC_ERR_DOMAIN";
    case DRC_ERR_NUMERIC:
        return "DRC_ERR_NUMERIC";
    case DRC_ERR_IO:
        return "DRC_ERR_IO";
    }
    return "DRC_ERR_UNKNOWN";
}

const char *drc_last_error(void) { return t_last_error.c_str(); }

/* ---- parameters ---------------------------------------------------- */

drc_status drc_params_default(drc_params **out) {
    if (drc_status s = require(out != nullptr, "out pointer is NULL"))
        return s;
    return guarded([&] {
        *out = new drc_params{drc::CircuitParams::baseline()};
        return DRC_OK;
    });
}

drc_status drc_params_from_file(const char *path, drc_params **out) {
    if (drc_status s = require(path && out, "path/out pointer is NULL"))
        return s;
    return guarded([&] {
        drc::CircuitParams p = drc::load_config_file(path);
        *out = new drc_params{std::move(p)};
        return DRC_OK;
    });
}

drc_status drc_params_from_string(const char *text, drc_params **out) {
    if (drc_status s = require(text && out, "text/out pointer is NULL"))
        return s;
    return guarded([&] {
        drc::CircuitParams p = drc::parse_config_text(text);
        *out = new drc_params{std::move(p)};
        return DRC_OK;
    });
}

void drc_params_free(drc_params *params) { delete params; }

drc_status drc_params_clone(const drc_params *params, drc_params **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        *out = new drc_params{params->p};
        return DRC_OK;
    });
}

drc_status drc_params_set(drc_params *params, const char *key, double value) {
    if (drc_status s = require(params && key, "params/key pointer is NULL"))
        return s;
    return guarded([&] {
        drc::CircuitParams updated = params->p;
        drc::params_set_key(updated, key, value);
        params->p = std::move(updated); // leave the handle intact on failure
        return DRC_OK;
    });
}

drc_status drc_params_get(const drc_params *params, const char *key,
                          double *out) {
    if (drc_status s = require(params && key && out, "params/key/out is NULL"))
        return s;
    return guarded([&] {
        *out = drc::params_get_key(params->p, key);
        return DRC_OK;
    });
}

drc_status drc_params_warning_count(const drc_params *params, size_t *out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    *out = params->p.warnings.size();
    return DRC_OK;
}

drc_status drc_params_warning(const drc_params *params, size_t index,
                              const char **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    if (drc_status s =
            require(index < params->p.warnings.size(), "warning index out of range"))
        return s;
    *out = params->p.warnings[index].c_str();
    return DRC_OK;
}

/* ---- flux tuning ---------------------------------------------------- */

namespace {

drc_status qubit_curve(const drc_params *params, char qubit, double *omega_max,
                       double *alpha) {
    if (qubit == 'x') {
        *omega_max = params->p.omega_x_max;
        *alpha = params->p.alpha_x;
        return DRC_OK;
    }
    if (qubit == 'y') {
        *omega_max = params->p.omega_y_max;
        *alpha = params->p.alpha_y;
        return DRC_OK;
    }
    set_error("qubit must be 'x' or 'y'");
    return DRC_ERR_INVALID_ARGUMENT;
}

} // namespace

drc_status drc_flux_frequency(const drc_params *params, char qubit, double phi,
                              double *omega_ghz) {
    if (drc_status s = require(params && omega_ghz, "params/out pointer is NULL"))
        return s;
    double omega_max = 0.0, alpha = 0.0;
    if (drc_status s = qubit_curve(params, qubit, &omega_max, &alpha))
        return s;
    return guarded([&] {
        *omega_ghz = drc::flux_frequency(omega_max, alpha, phi);
        return DRC_OK;
    });
}

drc_status drc_flux_for_frequency(const drc_params *params, char qubit,
                                  double omega_ghz, double *phi) {
    if (drc_status s = require(params && phi, "params/out pointer is NULL"))
        return s;
    double omega_max = 0.0, alpha = 0.0;
    if (drc_status s = qubit_curve(params, qubit, &omega_max, &alpha))
        return s;
    return guarded([&] {
        *phi = drc::flux_for_frequency(omega_max, alpha, omega_ghz);
        return DRC_OK;
    });
}

/* ---- numeric spectrum ------------------------------------------------ */

drc_status drc_spectrum(const drc_params *params, double omega_x_ghz,
                        double omega_y_ghz, const drc_spectrum_options *options,
                        drc_level *levels, size_t count) {
    if (drc_status s = require(params != nullptr, "params pointer is NULL"))
        return s;
    if (drc_status s =
            require(levels != nullptr || count == 0, "levels pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::SpectrumOptions opts = convert_spectrum_options(options);
        if (count > static_cast<size_t>(opts.trunc.dim()))
            throw std::invalid_argument(
                "count exceeds the truncated space dimension");
        const drc::Spectrum sp =
            drc::labeled_spectrum(params->p, omega_x_ghz, omega_y_ghz, opts);
        for (size_t k = 0; k < count; ++k) {
            const drc::Level &lv = sp.levels[k];
            levels[k].energy_ghz = lv.energy_ghz;
            levels[k].overlap = lv.overlap;
            levels[k].occ[0] = lv.occ.a;
            levels[k].occ[1] = lv.occ.x;
            levels[k].occ[2] = lv.occ.y;
            levels[k].occ[3] = lv.occ.b;
            levels[k].hybridized = lv.hybridized ? 1 : 0;
        }
        return DRC_OK;
    });
}

drc_status drc_zz_numeric(const drc_params *params, double omega_x_ghz,
                          double omega_y_ghz,
                          const drc_spectrum_options *options, double *zz_ghz,
                          int *reliable) {
    if (drc_status s = require(params && zz_ghz, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::ZZNumeric z = drc::zz_numeric(
            params->p, omega_x_ghz, omega_y_ghz, convert_spectrum_options(options));
        *zz_ghz = z.zz_ghz;
        if (reliable)
            *reliable = z.reliable ? 1 : 0;
        return DRC_OK;
    });
}

drc_status drc_hamiltonian_dump(const drc_params *params, double omega_x_ghz,
                                double omega_y_ghz,
                                const drc_spectrum_options *options,
                                const char *path) {
    if (drc_status s = require(params && path, "params/path pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::SpectrumOptions opts = convert_spectrum_options(options);
        const Eigen::MatrixXd h =
            drc::build_hamiltonian(params->p, omega_x_ghz, omega_y_ghz, opts);
        drc::Dataset ds({"row", "col", "value"});
        for (int r = 0; r < h.rows(); ++r)
            for (int c = 0; c < h.cols(); ++c)
                if (h(r, c) != 0.0)
                    ds.append_row({static_cast<double>(r),
                                   static_cast<double>(c), h(r, c)});
        ds.write_csv(path);
        return DRC_OK;
    });
}

/* ---- effective parameters -------------------------------------------- */

drc_status drc_effective(const drc_params *params, double omega_x_ghz,
                         double omega_y_ghz, drc_effective_params *out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::EffectiveParams e =
            drc::effective_params(params->p, omega_x_ghz, omega_y_ghz);
        out->omega_d_x_ghz = e.omega_d_x;
        out->omega_d_y_ghz = e.omega_d_y;
        out->omega_d_a_ghz = e.omega_d_a;
        out->omega_d_b_ghz = e.omega_d_b;
        out->g_in_a_ghz = e.g_in_a;
        out->g_in_b_ghz = e.g_in_b;
        out->g_d_xy_ghz = e.g_d_xy;
        out->g_d_ab_ghz = e.g_d_ab;
        out->dw_x_ghz = e.dw_x;
        out->dw_y_ghz = e.dw_y;
        out->omega_cr_x_ghz = e.omega_cr_x;
        out->omega_cr_y_ghz = e.omega_cr_y;
        out->g_cr_xy_ghz = e.g_cr_xy;
        out->near_pole = e.near_pole ? 1 : 0;
        out->dispersive = e.dispersive ? 1 : 0;
        return DRC_OK;
    });
}

/* ---- analytic ZZ ------------------------------------------------------ */

drc_status drc_zz_analytic(const drc_params *params, double omega_x_ghz,
                           double omega_y_ghz, const drc_zz_options *options,
                           drc_zz_breakdown *out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::ZZBreakdown b = drc::zz_breakdown(
            params->p, omega_x_ghz, omega_y_ghz, convert_zz_options(options));
        out->xi2_ghz = b.xi2;
        out->xi3_a_ghz = b.xi3_a;
        out->xi3_b_ghz = b.xi3_b;
        out->xi4s_a_ghz = b.xi4s_a;
        out->xi4s_b_ghz = b.xi4s_b;
        out->xi4c0_x_ghz = b.xi4c0_x;
        out->xi4c0_y_ghz = b.xi4c0_y;
        out->xi4c1_x_ghz = b.xi4c1_x;
        out->xi4c1_y_ghz = b.xi4c1_y;
        out->xi_total_ghz = b.xi_total;
        out->near_pole = b.near_pole ? 1 : 0;
        return DRC_OK;
    });
}

drc_status drc_zz_poles(const drc_params *params, double omega_x_ghz,
                        double lo_ghz, double hi_ghz, double *poles_ghz,
                        size_t capacity, size_t *count) {
    if (drc_status s = require(params && count, "params/count pointer is NULL"))
        return s;
    if (drc_status s = require(poles_ghz != nullptr || capacity == 0,
                               "poles pointer is NULL"))
        return s;
    return guarded([&] {
        const std::vector<double> poles =
            drc::zz_pole_catalog(params->p, omega_x_ghz, lo_ghz, hi_ghz);
        *count = poles.size();
        const size_t n = capacity < poles.size() ? capacity : poles.size();
        for (size_t k = 0; k < n; ++k)
            poles_ghz[k] = poles[k];
        return DRC_OK;
    });
}

/* ---- datasets ---------------------------------------------------------- */

drc_status drc_dataset_rows(const drc_dataset *ds, size_t *out) {
    if (drc_status s = require(ds && out, "dataset/out pointer is NULL"))
        return s;
    *out = ds->d.rows();
    return DRC_OK;
}

drc_status drc_dataset_cols(const drc_dataset *ds, size_t *out) {
    if (drc_status s = require(ds && out, "dataset/out pointer is NULL"))
        return s;
    *out = ds->d.cols();
    return DRC_OK;
}

drc_status drc_dataset_col_name(const drc_dataset *ds, size_t col,
                                const char **out) {
    if (drc_status s = require(ds && out, "dataset/out pointer is NULL"))
        return s;
    return guarded([&] {
        *out = ds->d.column_name(col).c_str();
        return DRC_OK;
    });
}

drc_status drc_dataset_cell(const drc_dataset *ds, size_t row, size_t col,
                            double *out) {
    if (drc_status s = require(ds && out, "dataset/out pointer is NULL"))
        return s;
    return guarded([&] {
        if (ds->d.is_text(row, col))
            throw std::invalid_argument("cell holds text, not a number");
        *out = ds->d.cell(row, col);
        return DRC_OK;
    });
}

drc_status drc_dataset_cell_text(const drc_dataset *ds, size_t row, size_t col,
                                 const char **out) {
    if (drc_status s = require(ds && out, "dataset/out pointer is NULL"))
        return s;
    return guarded([&] {
        auto *mutable_ds = const_cast<drc_dataset *>(ds);
        std::string &slot = mutable_ds->rendered[{row, col}];
        slot = ds->d.cell_string(row, col);
        *out = slot.c_str();
        return DRC_OK;
    });
}

drc_status drc_dataset_write_csv(const drc_dataset *ds, const char *path) {
    if (drc_status s = require(ds && path, "dataset/path pointer is NULL"))
        return s;
    return guarded([&] {
        ds->d.write_csv(path);
        return DRC_OK;
    });
}

void drc_dataset_free(drc_dataset *ds) { delete ds; }

/* ---- sweeps ------------------------------------------------------------ */

drc_status drc_zz_sweep(const drc_params *params, double omega_x_ghz,
                        double lo_ghz, double hi_ghz, size_t points,
                        const drc_zz_options *options, int include_numeric,
                        const drc_spectrum_options *numeric_options,
                        drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::SpectrumOptions numeric_opts =
            convert_spectrum_options(numeric_options);
        return emit_dataset(
            drc::zz_sweep_dataset(params->p, omega_x_ghz, lo_ghz, hi_ghz,
                                  points, convert_zz_options(options),
                                  include_numeric != 0, &numeric_opts),
            out);
    });
}

drc_status drc_spectrum_sweep(const drc_params *params, double phi_x,
                              double phi_lo, double phi_hi, size_t points,
                              size_t max_levels,
                              const drc_spectrum_options *options,
                              drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        return emit_dataset(
            drc::spectrum_sweep_dataset(params->p, phi_x, phi_lo, phi_hi,
                                        points, max_levels,
                                        convert_spectrum_options(options)),
            out);
    });
}

drc_status drc_coupling_sweep(const drc_params *params, double omega_x_ghz,
                              double phi_lo, double phi_hi, size_t points,
                              drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        return emit_dataset(drc::coupling_sweep_dataset(params->p, omega_x_ghz,
                                                        phi_lo, phi_hi, points),
                            out);
    });
}

/* ---- root finding -------------------------------------------------------- */

drc_status drc_find_switchoff(const drc_params *params, double omega_x_ghz,
                              int target, double lo_ghz, double hi_ghz,
                              size_t scan_points, drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::RootScan scan = drc::find_switchoff(
            params->p, omega_x_ghz, convert_target(target), lo_ghz, hi_ghz,
            scan_points == 0 ? 1001 : scan_points);
        return emit_dataset(drc::roots_dataset(scan), out);
    });
}

drc_status drc_switchoff_contour(const drc_params *params, int target,
                                 double phi_lo, double phi_hi, size_t grid,
                                 drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const auto chains = drc::switchoff_contour(params->p,
                                                   convert_target(target),
                                                   phi_lo, phi_hi,
                                                   grid == 0 ? 201 : grid);
        return emit_dataset(drc::contour_dataset(chains), out);
    });
}

drc_status drc_find_zz_zero(const drc_params *params, double omega_x_ghz,
                            double lo_ghz, double hi_ghz, size_t scan_points,
                            const drc_zz_options *options, drc_dataset **out,
                            size_t *skipped) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::RootScan scan = drc::find_zz_zero(
            params->p, omega_x_ghz, lo_ghz, hi_ghz,
            scan_points == 0 ? 1001 : scan_points, convert_zz_options(options));
        if (skipped)
            *skipped = scan.skipped_brackets;
        return emit_dataset(drc::roots_dataset(scan), out);
    });
}

/* ---- figures and self-checks --------------------------------------------- */

drc_status drc_figure_write(const drc_params *params, const char *name,
                            const char *out_dir) {
    if (drc_status s = require(name && out_dir, "name/out_dir pointer is NULL"))
        return s;
    return guarded([&] {
        const drc::CircuitParams base =
            params ? params->p : drc::CircuitParams::baseline();
        drc::write_figure(base, name, out_dir);
        return DRC_OK;
    });
}

const char *drc_figure_names(void) {
    static const std::string names = [] {
        std::string joined;
        for (const std::string &n : drc::figure_names()) {
            if (!joined.empty())
                joined += ',';
            joined += n;
        }
        return joined;
    }();
    return names.c_str();
}

drc_status drc_validate(const drc_params *params, drc_dataset **out) {
    if (drc_status s = require(params && out, "params/out pointer is NULL"))
        return s;
    return guarded([&] {
        return emit_dataset(drc::run_validation(params->p), out);
    });
}

} /* extern "C" */
