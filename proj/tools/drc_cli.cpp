// drc — command-line front end over the shared-library C API.
//
// Subcommands: spectrum, coupling, zz, switchoff, zzzero, figure, validate.
// Exit codes: 0 success, 1 configuration/usage error, 2 numeric/IO failure.
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drcoupler.h"

namespace {

struct ParamsDeleter {
    void operator()(drc_params *p) const { drc_params_free(p); }
};
struct DatasetDeleter {
    void operator()(drc_dataset *d) const { drc_dataset_free(d); }
};
using ParamsPtr = std::unique_ptr<drc_params, ParamsDeleter>;
using DatasetPtr = std::unique_ptr<drc_dataset, DatasetDeleter>;

[[noreturn]] void fail(drc_status status) {
    std::fprintf(stderr, "error: %s (%s)\n", drc_last_error(),
                 drc_status_name(status));
    const bool config_error =
        status == DRC_ERR_INVALID_ARGUMENT || status == DRC_ERR_PARSE;
    std::exit(config_error ? 1 : 2);
}

void check(drc_status status) {
    if (status != DRC_OK)
        fail(status);
}

// Failures while assembling the device description are configuration errors
// (exit 1) no matter which status the library reports (missing file, bad
// key, out-of-domain value, ...).
void check_config(drc_status status) {
    if (status != DRC_OK) {
        std::fprintf(stderr, "error: %s (%s)\n", drc_last_error(),
                     drc_status_name(status));
        std::exit(1);
    }
}

// Shared options: device source and key overrides.
struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides; // key=value
    std::string out_path;               // empty: stdout
};

void add_common(CLI::App *cmd, CommonOptions &common, bool with_out = true) {
    cmd->add_option("--config", common.config_path,
                    "Config file (key = value lines)");
    cmd->add_option("--set", common.overrides,
                    "Override one parameter, e.g. --set g_xy_mhz=0.5 "
                    "(repeatable)");
    if (with_out)
        cmd->add_option("--out", common.out_path,
                        "Write CSV here instead of stdout");
}

ParamsPtr make_params(const CommonOptions &common) {
    drc_params *raw = nullptr;
    if (common.config_path.empty())
        check_config(drc_params_default(&raw));
    else
        check_config(drc_params_from_file(common.config_path.c_str(), &raw));
    ParamsPtr params(raw);

    for (const std::string &kv : common.overrides) {
        const size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: --set expects key=value, got '%s'\n",
                         kv.c_str());
            std::exit(1);
        }
        const std::string key = kv.substr(0, eq);
        const std::string text = kv.substr(eq + 1);
        char *end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size()) {
            std::fprintf(stderr, "error: --set %s: '%s' is not a number\n",
                         key.c_str(), text.c_str());
            std::exit(1);
        }
        check_config(drc_params_set(params.get(), key.c_str(), value));
    }

    size_t warning_count = 0;
    check_config(drc_params_warning_count(params.get(), &warning_count));
    for (size_t i = 0; i < warning_count; ++i) {
        const char *text = nullptr;
        check_config(drc_params_warning(params.get(), i, &text));
        std::fprintf(stderr, "warning: %s\n", text);
    }
    return params;
}

void emit(const DatasetPtr &ds, const CommonOptions &common) {
    if (!common.out_path.empty()) {
        check(drc_dataset_write_csv(ds.get(), common.out_path.c_str()));
        return;
    }
    size_t rows = 0, cols = 0;
    check(drc_dataset_rows(ds.get(), &rows));
    check(drc_dataset_cols(ds.get(), &cols));
    for (size_t c = 0; c < cols; ++c) {
        const char *name = nullptr;
        check(drc_dataset_col_name(ds.get(), c, &name));
        std::fputs(name, stdout);
        std::fputc(c + 1 < cols ? ',' : '\n', stdout);
    }
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols; ++c) {
            const char *text = nullptr;
            check(drc_dataset_cell_text(ds.get(), r, c, &text));
            std::fputs(text, stdout);
            std::fputc(c + 1 < cols ? ',' : '\n', stdout);
        }
    }
}

// "--truncation a,x,y,b" -> spectrum options; also convention and RWA flags.
struct SpectrumFlags {
    std::string truncation;
    std::string convention = "uniform";
    bool rwa = false;
};

void add_spectrum_flags(CLI::App *cmd, SpectrumFlags &flags) {
    cmd->add_option("--truncation", flags.truncation,
                    "Levels per mode as a,x,y,b (default 4,3,3,4)");
    cmd->add_option("--convention", flags.convention,
                    "Qubit ladder elements: uniform|bosonic (default uniform)")
        ->check(CLI::IsMember({"uniform", "bosonic"}));
    cmd->add_flag("--rwa", flags.rwa, "Drop counter-rotating terms");
}

drc_spectrum_options make_spectrum_options(const SpectrumFlags &flags) {
    drc_spectrum_options opts{};
    if (!flags.truncation.empty()) {
        int n[4] = {0, 0, 0, 0};
        if (std::sscanf(flags.truncation.c_str(), "%d,%d,%d,%d", &n[0], &n[1],
                        &n[2], &n[3]) != 4) {
            std::fprintf(stderr,
                         "error: --truncation expects four integers a,x,y,b\n");
            std::exit(1);
        }
        opts.n_a = n[0];
        opts.n_x = n[1];
        opts.n_y = n[2];
        opts.n_b = n[3];
    }
    opts.convention = flags.convention == "bosonic" ? DRC_CONVENTION_BOSONIC
                                                    : DRC_CONVENTION_UNIFORM;
    opts.rwa = flags.rwa ? 1 : 0;
    return opts;
}

double idle_frequency(const ParamsPtr &params, char qubit) {
    double omega = 0.0;
    check(drc_flux_frequency(params.get(), qubit, 0.0, &omega));
    return omega;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Double-resonator coupler toolkit: spectra, effective couplings, "
        "static ZZ analysis, switch-off and ZZ-free root finding"};
    app.require_subcommand(1);

    // ---- spectrum -----------------------------------------------------
    auto *spectrum = app.add_subcommand(
        "spectrum", "Labeled eigenlevels along a phi_y sweep");
    CommonOptions spectrum_common;
    SpectrumFlags spectrum_flags;
    double sp_phi_x = 0.0, sp_phi_lo = -1.55, sp_phi_hi = 1.55;
    size_t sp_grid = 1001, sp_max_levels = 0;
    std::string sp_dump_h;
    double sp_omega_x = -1.0, sp_omega_y = -1.0;
    add_common(spectrum, spectrum_common);
    add_spectrum_flags(spectrum, spectrum_flags);
    spectrum->add_option("--phi-x", sp_phi_x, "Fixed qubit-x node phase (rad)");
    spectrum->add_option("--phi-lo", sp_phi_lo, "phi_y sweep start (rad)");
    spectrum->add_option("--phi-hi", sp_phi_hi, "phi_y sweep end (rad)");
    spectrum->add_option("--grid", sp_grid, "Sweep points (default 1001)");
    spectrum->add_option("--max-levels", sp_max_levels,
                         "Keep only the lowest N levels per point (0 = all)");
    spectrum->add_option("--dump-h", sp_dump_h,
                         "Also write the Hamiltonian matrix (row,col,value) "
                         "at --omega-x/--omega-y to this path");
    spectrum->add_option("--omega-x", sp_omega_x,
                         "Qubit-x frequency for --dump-h (GHz; default idle)");
    spectrum->add_option("--omega-y", sp_omega_y,
                         "Qubit-y frequency for --dump-h (GHz; default idle)");

    // ---- coupling -----------------------------------------------------
    auto *coupling = app.add_subcommand(
        "coupling", "Effective couplings g_d and g_cr along a phi_y sweep");
    CommonOptions coupling_common;
    double cp_omega_x = -1.0, cp_phi_lo = -1.55, cp_phi_hi = 1.55;
    size_t cp_grid = 1001;
    add_common(coupling, coupling_common);
    coupling->add_option("--omega-x", cp_omega_x,
                         "Fixed qubit-x frequency (GHz; default idle)");
    coupling->add_option("--phi-lo", cp_phi_lo, "phi_y sweep start (rad)");
    coupling->add_option("--phi-hi", cp_phi_hi, "phi_y sweep end (rad)");
    coupling->add_option("--grid", cp_grid, "Sweep points (default 1001)");

    // ---- zz -------------------------------------------------------------
    auto *zz = app.add_subcommand(
        "zz", "Analytic static-ZZ breakdown over an omega_y range");
    CommonOptions zz_common;
    SpectrumFlags zz_numeric_flags;
    double zz_omega_x = -1.0, zz_lo = 4.7, zz_hi = 5.0;
    size_t zz_grid = 1001;
    bool zz_cross_kerr = false, zz_sym = false, zz_include_numeric = false;
    add_common(zz, zz_common);
    zz->add_option("--omega-x", zz_omega_x,
                   "Fixed qubit-x frequency (GHz; default idle)");
    zz->add_option("--lo", zz_lo, "omega_y range start (GHz, default 4.7)");
    zz->add_option("--hi", zz_hi, "omega_y range end (GHz, default 5.0)");
    zz->add_option("--grid", zz_grid, "Sweep points (default 1001)");
    zz->add_flag("--cross-kerr", zz_cross_kerr,
                 "Include the two-resonator cross-Kerr terms");
    zz->add_flag("--symmetrized-xi3", zz_sym,
                 "Use the x<->y-symmetric third-order prefactor");
    zz->add_flag("--numeric-zz", zz_include_numeric,
                 "Append exact-diagonalization columns (slow)");
    add_spectrum_flags(zz, zz_numeric_flags);

    // ---- switchoff ------------------------------------------------------
    auto *switchoff = app.add_subcommand(
        "switchoff", "Zeros of the effective coupling (1D roots or 2D contour)");
    CommonOptions so_common;
    double so_omega_x = -1.0, so_lo = 4.2, so_hi = 5.0;
    double so_phi_lo = -1.55, so_phi_hi = 1.55;
    size_t so_grid = 0;
    std::string so_target = "gcr";
    bool so_contour = false;
    add_common(switchoff, so_common);
    switchoff->add_option("--omega-x", so_omega_x,
                          "Fixed qubit-x frequency (GHz; default idle)");
    switchoff->add_option("--target", so_target, "Which coupling: gd|gcr")
        ->check(CLI::IsMember({"gd", "gcr"}));
    switchoff->add_option("--lo", so_lo, "omega_y scan start (GHz)");
    switchoff->add_option("--hi", so_hi, "omega_y scan end (GHz)");
    switchoff->add_option("--grid", so_grid,
                          "Scan points (default 1001; 201 for --contour)");
    switchoff->add_flag("--contour", so_contour,
                        "Zero contour over the (phi_x, phi_y) plane instead");
    switchoff->add_option("--phi-lo", so_phi_lo, "Contour phi range start");
    switchoff->add_option("--phi-hi", so_phi_hi, "Contour phi range end");

    // ---- zzzero -----------------------------------------------------------
    auto *zzzero = app.add_subcommand(
        "zzzero", "Zeros of the total analytic static ZZ over omega_y");
    CommonOptions zr_common;
    double zr_omega_x = -1.0, zr_lo = 4.1, zr_hi = 5.0;
    size_t zr_grid = 0;
    bool zr_no_cross_kerr = false, zr_sym = false;
    add_common(zzzero, zr_common);
    zzzero->add_option("--omega-x", zr_omega_x,
                       "Fixed qubit-x frequency (GHz; default idle)");
    zzzero->add_option("--lo", zr_lo, "omega_y scan start (GHz, default 4.1)");
    zzzero->add_option("--hi", zr_hi, "omega_y scan end (GHz, default 5.0)");
    zzzero->add_option("--grid", zr_grid, "Scan points (default 1001)");
    zzzero->add_flag("--no-cross-kerr", zr_no_cross_kerr,
                     "Exclude the two-resonator cross-Kerr terms");
    zzzero->add_flag("--symmetrized-xi3", zr_sym,
                     "Use the x<->y-symmetric third-order prefactor");

    // ---- figure --------------------------------------------------------
    auto *figure = app.add_subcommand(
        "figure", "Write the CSV datasets behind a reference figure");
    CommonOptions fig_common;
    std::string fig_name, fig_out_dir = "figures";
    add_common(figure, fig_common, /*with_out=*/false);
    figure->add_option("name", fig_name, "One of: " +
                                             std::string(drc_figure_names()))
        ->required();
    figure->add_option("--out-dir", fig_out_dir,
                       "Output directory (default ./figures)");

    // ---- validate --------------------------------------------------------
    auto *validate = app.add_subcommand(
        "validate", "Run the built-in cross-validation suite");
    CommonOptions val_common;
    add_common(validate, val_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e); // --help and friends: exit 0
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1; // usage errors are configuration errors
    }

    if (spectrum->parsed()) {
        ParamsPtr params = make_params(spectrum_common);
        const drc_spectrum_options opts = make_spectrum_options(spectrum_flags);
        if (!sp_dump_h.empty()) {
            const double wx =
                sp_omega_x > 0 ? sp_omega_x : idle_frequency(params, 'x');
            const double wy =
                sp_omega_y > 0 ? sp_omega_y : idle_frequency(params, 'y');
            check(drc_hamiltonian_dump(params.get(), wx, wy, &opts,
                                       sp_dump_h.c_str()));
            std::fprintf(stderr, "wrote %s\n", sp_dump_h.c_str());
        }
        drc_dataset *raw = nullptr;
        check(drc_spectrum_sweep(params.get(), sp_phi_x, sp_phi_lo, sp_phi_hi,
                                 sp_grid, sp_max_levels, &opts, &raw));
        emit(DatasetPtr(raw), spectrum_common);
        return 0;
    }

    if (coupling->parsed()) {
        ParamsPtr params = make_params(coupling_common);
        const double wx =
            cp_omega_x > 0 ? cp_omega_x : idle_frequency(params, 'x');
        drc_dataset *raw = nullptr;
        check(drc_coupling_sweep(params.get(), wx, cp_phi_lo, cp_phi_hi,
                                 cp_grid, &raw));
        emit(DatasetPtr(raw), coupling_common);
        return 0;
    }

    if (zz->parsed()) {
        ParamsPtr params = make_params(zz_common);
        const double wx =
            zz_omega_x > 0 ? zz_omega_x : idle_frequency(params, 'x');
        drc_zz_options opts{};
        opts.cross_kerr = zz_cross_kerr ? 1 : 0;
        opts.xi3_symmetrized = zz_sym ? 1 : 0;
        const drc_spectrum_options numeric_opts =
            make_spectrum_options(zz_numeric_flags);
        drc_dataset *raw = nullptr;
        check(drc_zz_sweep(params.get(), wx, zz_lo, zz_hi, zz_grid, &opts,
                           zz_include_numeric ? 1 : 0, &numeric_opts, &raw));
        emit(DatasetPtr(raw), zz_common);
        return 0;
    }

    if (switchoff->parsed()) {
        ParamsPtr params = make_params(so_common);
        const int target =
            so_target == "gd" ? DRC_SWITCHOFF_G_D : DRC_SWITCHOFF_G_CR;
        drc_dataset *raw = nullptr;
        if (so_contour) {
            check(drc_switchoff_contour(params.get(), target, so_phi_lo,
                                        so_phi_hi, so_grid, &raw));
        } else {
            const double wx =
                so_omega_x > 0 ? so_omega_x : idle_frequency(params, 'x');
            check(drc_find_switchoff(params.get(), wx, target, so_lo, so_hi,
                                     so_grid, &raw));
            size_t rows = 0;
            check(drc_dataset_rows(raw, &rows));
            if (rows == 0)
                std::fprintf(stderr, "no sign change on the scan grid\n");
        }
        emit(DatasetPtr(raw), so_common);
        return 0;
    }

    if (zzzero->parsed()) {
        ParamsPtr params = make_params(zr_common);
        const double wx =
            zr_omega_x > 0 ? zr_omega_x : idle_frequency(params, 'x');
        drc_zz_options opts{};
        opts.cross_kerr = zr_no_cross_kerr ? 0 : 1;
        opts.xi3_symmetrized = zr_sym ? 1 : 0;
        drc_dataset *raw = nullptr;
        size_t skipped = 0;
        check(drc_find_zz_zero(params.get(), wx, zr_lo, zr_hi, zr_grid, &opts,
                               &raw, &skipped));
        DatasetPtr ds(raw);
        size_t rows = 0;
        check(drc_dataset_rows(ds.get(), &rows));
        if (skipped > 0)
            std::fprintf(stderr, "%zu bracket(s) skipped near poles\n", skipped);
        if (rows == 0)
            std::fprintf(stderr, "no ZZ zero on the scan grid\n");
        emit(ds, zr_common);
        return 0;
    }

    if (figure->parsed()) {
        ParamsPtr params = make_params(fig_common);
        check(drc_figure_write(params.get(), fig_name.c_str(),
                               fig_out_dir.c_str()));
        std::fprintf(stderr, "wrote %s datasets to %s\n", fig_name.c_str(),
                     fig_out_dir.c_str());
        return 0;
    }

    if (validate->parsed()) {
        ParamsPtr params = make_params(val_common);
        drc_dataset *raw = nullptr;
        check(drc_validate(params.get(), &raw));
        DatasetPtr ds(raw);
        emit(ds, val_common);
        size_t rows = 0;
        check(drc_dataset_rows(ds.get(), &rows));
        size_t failed = 0;
        for (size_t r = 0; r < rows; ++r) {
            double passed = 0.0;
            check(drc_dataset_cell(ds.get(), r, 1, &passed));
            if (passed == 0.0)
                ++failed;
        }
        if (failed > 0) {
            std::fprintf(stderr, "%zu validation check(s) failed\n", failed);
            return 2;
        }
        std::fprintf(stderr, "all validation checks passed\n");
        return 0;
    }

    return 0;
}
