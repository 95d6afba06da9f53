#pragma once

#include <string>
#include <vector>

#include "core/params.hpp"

namespace drc {

// Parses flat key=value config text ('#' comments, blank lines allowed).
//
// Two disjoint key sets are accepted:
//  - direct circuit keys (omega_a_ghz, ..., g_ab_mhz): each overrides the
//    corresponding baseline value; unmentioned keys keep their defaults;
//  - the circuit-network block (C_*_fF, L_*_nH, EJ_*_ghz): all 14 keys must
//    be present together, and none of the direct keys may appear with them;
//    the circuit parameters are then derived from the network elements.
//
// Unknown keys, duplicate keys, malformed lines, or a mixed/incomplete
// network block raise parse_error (with the offending 1-based line number
// when one exists).  The result is validated before being returned.
CircuitParams parse_config_text(const std::string &text);

// Reads the file and forwards to parse_config_text; throws io_error if the
// file cannot be read.
CircuitParams load_config_file(const std::string &path);

// Single-key access used by CLI --set overrides and the library API. Only
// the 12 direct circuit keys are addressable here. Unknown keys raise
// std::invalid_argument; the new value set is validated afterwards.
void params_set_key(CircuitParams &params, const std::string &key, double value);
double params_get_key(const CircuitParams &params, const std::string &key);

// The 12 direct circuit keys, in canonical order.
const std::vector<std::string> &direct_config_keys();

} // namespace drc
