// Physical constants and the unit conventions used throughout the core.
//
// All frequencies are ordinary frequencies (omega/2pi) in GHz unless a name
// says otherwise; anharmonicities are negative GHz; capacitances enter in fF,
// inductances in nH; node phases in radians.
#pragma once

namespace drc {

inline constexpr double kElementaryChargeC = 1.602176634e-19; // coulomb
inline constexpr double kPlanckJs = 6.62607015e-34;           // joule-second

inline constexpr double kPi = 3.14159265358979323846;

// Pole guards for the perturbative formulas: denominators below the hard
// guard abort the evaluation; below the soft guard they set a near-pole flag.
inline constexpr double kPoleHardGhz = 1e-6; // 1 kHz
inline constexpr double kPoleSoftGhz = 1e-2; // 10 MHz

// A refined root must re-evaluate below this (1 Hz); brackets that refine to
// a larger residual straddle a pole, not a zero, and are discarded.
inline constexpr double kRootResidualGhz = 1e-9;

inline constexpr double mhz_to_ghz(double mhz) { return mhz * 1e-3; }
inline constexpr double ghz_to_mhz(double ghz) { return ghz * 1e3; }

} // namespace drc
