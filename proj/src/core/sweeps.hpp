// Grid sweeps over bias/frequency, root reports for switch-off and zero-ZZ
// points, and their dataset renderings.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "core/csv.hpp"
#include "core/hamiltonian.hpp"
#include "core/params.hpp"
#include "core/roots.hpp"
#include "core/zz.hpp"

namespace drc {

// Runs fn(i) for i in [0, n) — chunked across threads when the host has
// spare cores, serially otherwise.  Callers must write results into
// preallocated per-index slots so the outcome is identical either way.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

// Evenly spaced grid including both endpoints (points >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t points);

// omega_y sweep of the analytic ZZ breakdown at fixed omega_x.  With
// cross-Kerr enabled the columns are
//   omega_y_ghz, xi2_mhz, xi3_mhz, xi4s_mhz, xi4c0_mhz, xi4c1_mhz,
//   xi_total_mhz, near_pole
// and without it the two cross-Kerr columns are dropped.  Rows whose
// evaluation hits a hard pole hold nan and set near_pole.  `numeric` appends
// zz_numeric_mhz and zz_reliable columns from exact diagonalization.
Dataset zz_sweep_dataset(const CircuitParams &params, double omega_x_ghz,
                         double lo_ghz, double hi_ghz, std::size_t points,
                         const ZZOptions &options, bool numeric = false,
                         const SpectrumOptions *numeric_options = nullptr);

// phi_y sweep of labeled levels at fixed phi_x.  One row per (grid point,
// level):  phi_x, phi_y, label, energy_ghz, overlap, hybridized.
// `max_levels` keeps only the lowest-energy levels per point (0 = all).
Dataset spectrum_sweep_dataset(const CircuitParams &params, double phi_x,
                               double phi_lo, double phi_hi, std::size_t points,
                               std::size_t max_levels,
                               const SpectrumOptions &options);

// phi_y sweep of the effective couplings at fixed omega_x:
//   phi_y, omega_y_ghz, g_d_mhz, g_cr_mhz.
Dataset coupling_sweep_dataset(const CircuitParams &params, double omega_x_ghz,
                               double phi_lo, double phi_hi, std::size_t points);

enum class SwitchoffTarget { GD, GCR };

// Scans omega_y for sign changes of the chosen effective coupling and
// refines each bracket by bisection.  Refined brackets whose fresh residual
// stays above the 1 Hz root tolerance straddle a pole rather than a zero and
// are counted as skipped.
RootScan find_switchoff(const CircuitParams &params, double omega_x_ghz,
                        SwitchoffTarget target, double lo_ghz, double hi_ghz,
                        std::size_t scan_points = 1001);

// Zero contour of the chosen coupling over the (phi_x, phi_y) plane,
// extracted from the sign grid; chains are closed or end on the boundary.
std::vector<ContourChain> switchoff_contour(const CircuitParams &params,
                                            SwitchoffTarget target,
                                            double phi_lo, double phi_hi,
                                            std::size_t grid = 201);

// Scans omega_y for zeros of the total analytic ZZ.  Brackets containing a
// cataloged expansion pole are skipped; so are pole-straddling sign changes
// that fail the residual tolerance.
RootScan find_zz_zero(const CircuitParams &params, double omega_x_ghz,
                      double lo_ghz, double hi_ghz, std::size_t scan_points,
                      const ZZOptions &options);

// Root report rows: omega_y_ghz, bracket_lo_ghz, bracket_hi_ghz, residual_ghz.
Dataset roots_dataset(const RootScan &scan);

// Contour rows: chain, phi_x, phi_y (chain is a 0-based index).
Dataset contour_dataset(const std::vector<ContourChain> &chains);

} // namespace drc
