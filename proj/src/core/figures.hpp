// Canned dataset recipes reproducing the reference plots: level diagrams,
// coupling surfaces and cuts, switch-off families, and ZZ sweeps.
#pragma once

#include <string>
#include <vector>

#include "core/csv.hpp"
#include "core/params.hpp"

namespace drc {

// Names accepted by write_figure, in canonical order:
// fig2, fig3, fig4, fig5, fig6, fig7, fig9, fig10.
const std::vector<std::string> &figure_names();

// Writes every dataset belonging to the named figure into out_dir (created
// if missing) and returns the file paths in deterministic order.  `base`
// supplies the device; per-figure overrides (coupling strengths, qubit
// frequency targets, anharmonicity variants) are applied on copies.
// Unknown names raise std::invalid_argument.
std::vector<std::string> write_figure(const CircuitParams &base,
                                      const std::string &name,
                                      const std::string &out_dir);

} // namespace drc
