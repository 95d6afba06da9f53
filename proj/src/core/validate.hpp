// Self-contained consistency suite: cross-checks the analytic expansion
// against exact diagonalization and verifies internal identities.
#pragma once

#include "core/csv.hpp"
#include "core/params.hpp"

namespace drc {

// Runs every check against the supplied device (probe frequencies are fixed
// near the reference operating points).  Returns one row per check with
// columns: check, passed, measured, expected, tolerance.
Dataset run_validation(const CircuitParams &params);

// True when every row of a run_validation dataset passed.
bool validation_passed(const Dataset &results);

} // namespace drc
