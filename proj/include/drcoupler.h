/* drcoupler.h — public C API for the double-resonator coupler toolkit.
 *
 * The library models a pair of flux-tunable transmon qubits (x, y) coupled
 * through two fixed-frequency resonators (a, b) plus weak direct qubit-qubit
 * and resonator-resonator capacitive couplings.  It provides:
 *
 *   - circuit-level parameter construction (capacitance network -> couplings),
 *   - a truncated multilevel Hamiltonian with exact diagonalization,
 *   - fourth-order effective (dispersive) parameters: decoupled frequencies,
 *     effective qubit-qubit and resonator-resonator couplings, corrected
 *     high-excitation frequencies,
 *   - the analytic static-ZZ expansion (2nd/3rd/4th order ladder terms plus
 *     the two-resonator cross-Kerr terms) and its numeric counterpart,
 *   - root finding (coupling switch-off, ZZ-free points), parameter sweeps,
 *     figure-recipe CSV export, and a self-check suite.
 *
 * Conventions: all frequencies are ordinary frequencies (omega/2pi) in GHz;
 * anharmonicities are negative; node phases are in radians.  Functions return
 * a drc_status code; on failure drc_last_error() yields a human-readable
 * message for the calling thread.  Out-parameters are untouched on failure
 * unless documented otherwise.  Handles are opaque and must be released with
 * the matching *_free function; passing NULL to a *_free is a no-op.
 */

#ifndef DRCOUPLER_H
#define DRCOUPLER_H

#include <stddef.h>

#if defined(_WIN32)
#  define DRC_API __declspec(dllexport)
#else
#  define DRC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* Status codes and error reporting                                    */
/* ------------------------------------------------------------------ */

typedef enum drc_status {
    DRC_OK = 0,
    DRC_ERR_INVALID_ARGUMENT = 1, /* bad handle, NULL out-pointer, bad enum */
    DRC_ERR_PARSE = 2,            /* config text could not be parsed        */
    DRC_ERR_DOMAIN = 3,           /* value outside the physical domain      */
    DRC_ERR_NUMERIC = 4,          /* pole hit, no convergence, overflow     */
    DRC_ERR_IO = 5                /* file could not be read or written      */
} drc_status;

/* Stable name for a status code ("DRC_OK", "DRC_ERR_PARSE", ...). */
DRC_API const char *drc_status_name(drc_status status);

/* Message describing the most recent failure on this thread; never NULL.
 * Empty string when no failure has occurred yet. */
DRC_API const char *drc_last_error(void);

/* ------------------------------------------------------------------ */
/* Parameters                                                          */
/* ------------------------------------------------------------------ */

/* Opaque parameter set: four mode frequencies, two anharmonicities and six
 * pairwise couplings, plus optional circuit-level (L, C, EJ) data. */
typedef struct drc_params drc_params;

/* Default parameter set (the baseline device used throughout the docs):
 *   omega_a=4.10, omega_b=5.20, omega_x_max=4.56, omega_y_max=5.12 GHz,
 *   alpha_x=-175, alpha_y=-195 MHz,
 *   g_ax=g_ay=32, g_bx=g_by=30, g_xy=1.0, g_ab=0.1 MHz. */
DRC_API drc_status drc_params_default(drc_params **out);

/* Parse a key = value config file (see README for the key list).  Either the
 * twelve direct parameter keys or the full capacitance/inductance block must
 * be given; unknown keys are an error. */
DRC_API drc_status drc_params_from_file(const char *path, drc_params **out);

/* Same, from an in-memory string. */
DRC_API drc_status drc_params_from_string(const char *text, drc_params **out);

DRC_API void drc_params_free(drc_params *params);

/* Copy a parameter set. */
DRC_API drc_status drc_params_clone(const drc_params *params, drc_params **out);

/* Set/get one value by config key name (e.g. "omega_a_ghz", "g_xy_mhz");
 * the unit implied by the key's suffix applies. */
DRC_API drc_status drc_params_set(drc_params *params, const char *key, double value);
DRC_API drc_status drc_params_get(const drc_params *params, const char *key, double *out);

/* Number of validation warnings (hierarchy / ordering violations) and the
 * i-th warning text.  Warnings never block construction. */
DRC_API drc_status drc_params_warning_count(const drc_params *params, size_t *out);
DRC_API drc_status drc_params_warning(const drc_params *params, size_t index,
                                      const char **out);

/* ------------------------------------------------------------------ */
/* Flux tuning                                                         */
/* ------------------------------------------------------------------ */

/* Qubit frequency at reduced flux phi (radians):
 * omega(phi) = (omega_max + |alpha|) * sqrt(|cos phi|) - |alpha|.
 * `qubit` is 'x' or 'y'. */
DRC_API drc_status drc_flux_frequency(const drc_params *params, char qubit,
                                      double phi, double *omega_ghz);

/* Inverse on the principal branch: the phi in [0, pi/2) with
 * omega(phi) = omega_ghz.  Errors if omega_ghz exceeds the qubit maximum. */
DRC_API drc_status drc_flux_for_frequency(const drc_params *params, char qubit,
                                          double omega_ghz, double *phi);

/* ------------------------------------------------------------------ */
/* Numeric spectrum                                                    */
/* ------------------------------------------------------------------ */

/* Ladder-operator matrix-element convention for qubit modes. */
typedef enum drc_convention {
    DRC_CONVENTION_UNIFORM = 0, /* equal neighbour couplings (default)    */
    DRC_CONVENTION_BOSONIC = 1  /* sqrt(n) harmonic-oscillator elements   */
} drc_convention;

/* Options for Hamiltonian construction / diagonalization.  Zero-initialize
 * then override; n_* of 0 means the default truncation (4,3,3,4). */
typedef struct drc_spectrum_options {
    int n_a, n_x, n_y, n_b;    /* levels kept per mode (order a,x,y,b)   */
    int convention;            /* drc_convention                          */
    int rwa;                   /* nonzero: drop counter-rotating terms    */
} drc_spectrum_options;

/* One labeled eigenstate. */
typedef struct drc_level {
    double energy_ghz;   /* eigenvalue */
    double overlap;      /* |<basis label|eigvec>|^2 for the chosen label */
    int occ[4];          /* basis label occupations (a,x,y,b)             */
    int hybridized;      /* 1 when overlap < 0.5                          */
} drc_level;

/* Diagonalize at qubit frequencies (omega_x, omega_y) and return the lowest
 * `count` labeled levels into `levels` (caller-allocated), sorted by energy.
 * `options` may be NULL for defaults. */
DRC_API drc_status drc_spectrum(const drc_params *params,
                                double omega_x_ghz, double omega_y_ghz,
                                const drc_spectrum_options *options,
                                drc_level *levels, size_t count);

/* Numeric static ZZ: E(0110)-E(0100)-E(0010)+E(0000) from labeled levels.
 * `reliable` (optional) is 0 when any of the four states is hybridized. */
DRC_API drc_status drc_zz_numeric(const drc_params *params,
                                  double omega_x_ghz, double omega_y_ghz,
                                  const drc_spectrum_options *options,
                                  double *zz_ghz, int *reliable);

/* Write the dense Hamiltonian at (omega_x, omega_y) to `path` as CSV with
 * columns row, col, value (GHz); zero entries are omitted. */
DRC_API drc_status drc_hamiltonian_dump(const drc_params *params,
                                        double omega_x_ghz, double omega_y_ghz,
                                        const drc_spectrum_options *options,
                                        const char *path);

/* ------------------------------------------------------------------ */
/* Effective (dispersive) parameters                                   */
/* ------------------------------------------------------------------ */

typedef struct drc_effective_params {
    double omega_d_x_ghz;  /* decoupled qubit frequencies  */
    double omega_d_y_ghz;
    double omega_d_a_ghz;  /* decoupled resonator frequencies */
    double omega_d_b_ghz;
    double g_in_a_ghz;     /* per-resonator indirect qubit-qubit coupling */
    double g_in_b_ghz;
    double g_d_xy_ghz;     /* effective qubit-qubit coupling (incl. direct) */
    double g_d_ab_ghz;     /* effective resonator-resonator coupling */
    double dw_x_ghz;       /* high-excitation corrections */
    double dw_y_ghz;
    double omega_cr_x_ghz; /* corrected qubit frequencies */
    double omega_cr_y_ghz;
    double g_cr_xy_ghz;    /* coupling rebuilt from corrected detunings */
    int near_pole;         /* 1 when any denominator is within 10 MHz of 0 */
    int dispersive;        /* 1 when every g/|Delta| < 1/4 */
} drc_effective_params;

DRC_API drc_status drc_effective(const drc_params *params,
                                 double omega_x_ghz, double omega_y_ghz,
                                 drc_effective_params *out);

/* ------------------------------------------------------------------ */
/* Analytic static ZZ                                                  */
/* ------------------------------------------------------------------ */

typedef struct drc_zz_options {
    int cross_kerr;        /* nonzero: include the two-resonator terms    */
    int xi3_symmetrized;  /* nonzero: 1/Delta_lambda_x on the second group */
} drc_zz_options;

typedef struct drc_zz_breakdown {
    double xi2_ghz;        /* direct-coupling second-order term      */
    double xi3_a_ghz;      /* third-order term via resonator a       */
    double xi3_b_ghz;
    double xi4s_a_ghz;     /* fourth-order single-resonator terms    */
    double xi4s_b_ghz;
    double xi4c0_x_ghz;    /* cross-resonator terms (per qubit)      */
    double xi4c0_y_ghz;
    double xi4c1_x_ghz;
    double xi4c1_y_ghz;
    double xi_total_ghz;   /* xi2+xi3+xi4s (+xi4c0-xi4c1 when enabled) */
    int near_pole;         /* any denominator within 10 MHz of zero   */
} drc_zz_breakdown;

/* Evaluate the analytic ZZ expansion.  `options` may be NULL (cross-Kerr on,
 * asymmetric third-order form).  Denominators within 1 kHz of zero error. */
DRC_API drc_status drc_zz_analytic(const drc_params *params,
                                   double omega_x_ghz, double omega_y_ghz,
                                   const drc_zz_options *options,
                                   drc_zz_breakdown *out);

/* The omega_y values in [lo, hi] where some expansion denominator vanishes
 * at fixed omega_x.  Writes up to `capacity` ascending values, sets *count. */
DRC_API drc_status drc_zz_poles(const drc_params *params, double omega_x_ghz,
                                double lo_ghz, double hi_ghz,
                                double *poles_ghz, size_t capacity,
                                size_t *count);

/* ------------------------------------------------------------------ */
/* Datasets (tabular results; CSV export)                              */
/* ------------------------------------------------------------------ */

typedef struct drc_dataset drc_dataset;

DRC_API drc_status drc_dataset_rows(const drc_dataset *ds, size_t *out);
DRC_API drc_status drc_dataset_cols(const drc_dataset *ds, size_t *out);
DRC_API drc_status drc_dataset_col_name(const drc_dataset *ds, size_t col,
                                        const char **out);
/* Numeric cell value; text cells return DRC_ERR_INVALID_ARGUMENT. */
DRC_API drc_status drc_dataset_cell(const drc_dataset *ds, size_t row,
                                    size_t col, double *out);
/* Cell rendered exactly as the CSV writer renders it (12 significant
 * digits for numbers; verbatim for text). Pointer valid until the dataset
 * is freed or the same cell is re-queried. */
DRC_API drc_status drc_dataset_cell_text(const drc_dataset *ds, size_t row,
                                         size_t col, const char **out);
/* Write the dataset as CSV (header row + data rows, comma separated). */
DRC_API drc_status drc_dataset_write_csv(const drc_dataset *ds, const char *path);
DRC_API void drc_dataset_free(drc_dataset *ds);

/* ------------------------------------------------------------------ */
/* Sweeps                                                              */
/* ------------------------------------------------------------------ */

/* Analytic ZZ sweep over omega_y at fixed omega_x.
 * Columns: omega_y_ghz, xi2_mhz, xi3_mhz, xi4s_mhz[, xi4c0_mhz, xi4c1_mhz],
 * xi_total_mhz, near_pole (cross-Kerr columns present when enabled).  When
 * `include_numeric` is nonzero, zz_numeric_mhz and zz_reliable columns from
 * exact diagonalization are appended (numeric_options NULL = defaults). */
DRC_API drc_status drc_zz_sweep(const drc_params *params, double omega_x_ghz,
                                double lo_ghz, double hi_ghz, size_t points,
                                const drc_zz_options *options,
                                int include_numeric,
                                const drc_spectrum_options *numeric_options,
                                drc_dataset **out);

/* Labeled-spectrum sweep over phi_y at fixed phi_x.
 * Columns: phi_x, phi_y, label, energy_ghz, overlap, hybridized. */
DRC_API drc_status drc_spectrum_sweep(const drc_params *params, double phi_x,
                                      double phi_lo, double phi_hi,
                                      size_t points, size_t max_levels,
                                      const drc_spectrum_options *options,
                                      drc_dataset **out);

/* Effective-coupling sweep over phi_y at fixed omega_x.
 * Columns: phi_y, omega_y_ghz, g_d_mhz, g_cr_mhz. */
DRC_API drc_status drc_coupling_sweep(const drc_params *params,
                                      double omega_x_ghz,
                                      double phi_lo, double phi_hi,
                                      size_t points, drc_dataset **out);

/* ------------------------------------------------------------------ */
/* Root finding                                                        */
/* ------------------------------------------------------------------ */

typedef enum drc_switchoff_target {
    DRC_SWITCHOFF_G_D = 0,  /* zero of the effective coupling g_d  */
    DRC_SWITCHOFF_G_CR = 1  /* zero of the corrected coupling g_cr */
} drc_switchoff_target;

/* Roots of the chosen coupling in omega_y over [lo, hi] at fixed omega_x.
 * Columns: omega_y_ghz, bracket_lo_ghz, bracket_hi_ghz, residual_ghz.
 * `scan_points` of 0 means the default grid (1001). */
DRC_API drc_status drc_find_switchoff(const drc_params *params,
                                      double omega_x_ghz, int target,
                                      double lo_ghz, double hi_ghz,
                                      size_t scan_points, drc_dataset **out);

/* Zero contour of g_d (or g_cr) over the (phi_x, phi_y) plane.
 * Columns: chain, phi_x, phi_y.  `grid` of 0 means 201. */
DRC_API drc_status drc_switchoff_contour(const drc_params *params, int target,
                                         double phi_lo, double phi_hi,
                                         size_t grid, drc_dataset **out);

/* Sign-change roots of the analytic xi_total in omega_y over [lo, hi]; grid
 * brackets that straddle a cataloged pole are skipped and counted in
 * *skipped (optional).  Columns as for drc_find_switchoff. */
DRC_API drc_status drc_find_zz_zero(const drc_params *params,
                                    double omega_x_ghz,
                                    double lo_ghz, double hi_ghz,
                                    size_t scan_points,
                                    const drc_zz_options *options,
                                    drc_dataset **out, size_t *skipped);

/* ------------------------------------------------------------------ */
/* Figures and self-checks                                             */
/* ------------------------------------------------------------------ */

/* Write the CSV files of a named figure recipe ("fig2", "fig3", "fig4",
 * "fig5", "fig6", "fig7", "fig9", "fig10") into directory `out_dir`
 * (created if missing).  `params` may be NULL for the default device.
 * Writes one or more <name><panel>.csv files; recipes are deterministic:
 * rerunning produces byte-identical files. */
DRC_API drc_status drc_figure_write(const drc_params *params, const char *name,
                                    const char *out_dir);

/* Names of the available figure recipes as a comma-separated list. */
DRC_API const char *drc_figure_names(void);

/* Run the built-in cross-validation suite (analytic formulas vs exact
 * diagonalization and closed-form identities).
 * Columns: check, passed, measured, expected, tolerance. */
DRC_API drc_status drc_validate(const drc_params *params, drc_dataset **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DRCOUPLER_H */
