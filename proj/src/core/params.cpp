#include "core/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/units.hpp"

namespace drc {

CircuitParams CircuitParams::baseline() {
    CircuitParams p;
    p.omega_a = 4.10;
    p.omega_b = 5.20;
    p.omega_x_max = 4.56;
    p.omega_y_max = 5.12;
    p.alpha_x = -0.175;
    p.alpha_y = -0.195;
    p.g_ax = 0.032;
    p.g_ay = 0.032;
    p.g_bx = 0.030;
    p.g_by = 0.030;
    p.g_xy = 0.001;
    p.g_ab = 0.0001;
    p.validate();
    return p;
}

void CircuitParams::validate() {
    warnings.clear();

    auto require_positive = [](double v, const char *name) {
        if (!(v > 0.0))
            throw std::domain_error(std::string(name) + " must be positive");
    };
    require_positive(omega_a, "omega_a");
    require_positive(omega_b, "omega_b");
    require_positive(omega_x_max, "omega_x_max");
    require_positive(omega_y_max, "omega_y_max");

    if (!(alpha_x < 0.0) || !(alpha_y < 0.0))
        throw std::domain_error("anharmonicities must be negative");

    for (double g : {g_ax, g_ay, g_bx, g_by, g_xy, g_ab})
        if (g < 0.0 || !std::isfinite(g))
            throw std::domain_error("couplings must be finite and non-negative");

    // Weak direct couplings: the perturbative treatment assumes
    // g_xy, g_ab well below the qubit-resonator couplings.
    const double g_qr_min = std::min({g_ax, g_ay, g_bx, g_by});
    if (g_qr_min > 0.0) {
        if (g_xy * 5.0 > g_qr_min)
            warnings.push_back("g_xy is not small against the qubit-resonator couplings");
        if (g_ab * 5.0 > g_qr_min)
            warnings.push_back("g_ab is not small against the qubit-resonator couplings");
    }

    // Intended frequency ordering: omega_a below both qubit maxima, omega_b
    // above both.  Violations do not block evaluation.
    if (!(omega_a < std::min(omega_x_max, omega_y_max)))
        warnings.push_back("omega_a is not below both qubit maxima");
    if (!(omega_b > std::max(omega_x_max, omega_y_max)))
        warnings.push_back("omega_b is not above both qubit maxima");
}

double flux_frequency(double omega_max_ghz, double alpha_ghz, double phi) {
    const double abs_alpha = std::fabs(alpha_ghz);
    return (omega_max_ghz + abs_alpha) * std::sqrt(std::fabs(std::cos(phi))) - abs_alpha;
}

double flux_for_frequency(double omega_max_ghz, double alpha_ghz, double omega_ghz) {
    const double abs_alpha = std::fabs(alpha_ghz);
    if (omega_ghz > omega_max_ghz)
        throw std::domain_error("target frequency exceeds the qubit maximum");
    if (!(omega_ghz > -abs_alpha))
        throw std::domain_error("target frequency is below the tuning range");
    const double ratio = (omega_ghz + abs_alpha) / (omega_max_ghz + abs_alpha);
    return std::acos(ratio * ratio);
}

} // namespace drc
