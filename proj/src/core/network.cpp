#include "core/network.hpp"

#include <cmath>
#include <stdexcept>

#include "core/units.hpp"

namespace drc {

void CapacitanceNetwork::validate_capacitances() const {
    for (double c : {C_a, C_b, C_x, C_y})
        if (!(c > 0.0))
            throw std::domain_error("self capacitances must be positive");
    for (double c : {C_ab, C_xy, C_ax, C_ay, C_bx, C_by})
        if (c < 0.0 || !std::isfinite(c))
            throw std::domain_error("mutual capacitances must be finite and non-negative");
}

void CapacitanceNetwork::validate_elements() const {
    validate_capacitances();
    if (!(L_a > 0.0) || !(L_b > 0.0))
        throw std::domain_error("resonator inductances must be positive");
    if (!(EJ_x > 0.0) || !(EJ_y > 0.0))
        throw std::domain_error("Josephson energies must be positive");
}

double charging_energy_ghz(double c_fF) {
    if (!(c_fF > 0.0))
        throw std::domain_error("capacitance must be positive");
    const double c_farad = c_fF * 1e-15;
    const double e = kElementaryChargeC;
    return (e * e) / (2.0 * c_farad) / kPlanckJs * 1e-9;
}

double qubit_frequency_ghz(double ej_ghz, double ec_ghz, bool *shallow) {
    if (!(ej_ghz > 0.0) || !(ec_ghz > 0.0))
        throw std::domain_error("EJ and EC must be positive");
    if (shallow)
        *shallow = ej_ghz / ec_ghz < 20.0;
    return std::sqrt(8.0 * ej_ghz * ec_ghz) - ec_ghz;
}

double ej_for_frequency_ghz(double omega_ghz, double ec_ghz) {
    if (!(omega_ghz > 0.0) || !(ec_ghz > 0.0))
        throw std::domain_error("frequency and EC must be positive");
    const double s = omega_ghz + ec_ghz;
    return s * s / (8.0 * ec_ghz);
}

double resonator_frequency_ghz(double l_nH, double c_fF) {
    if (!(l_nH > 0.0) || !(c_fF > 0.0))
        throw std::domain_error("inductance and capacitance must be positive");
    const double l = l_nH * 1e-9;
    const double c = c_fF * 1e-15;
    return 1.0 / (2.0 * kPi * std::sqrt(l * c)) * 1e-9;
}

Eigen::Matrix4d capacitance_matrix(const CapacitanceNetwork &net) {
    net.validate_capacitances();
    Eigen::Matrix4d m;
    // Node order (a, b, x, y); diagonal = self plus attached mutuals,
    // off-diagonal = minus the mutual.
    m(0, 0) = net.C_a + net.C_ab + net.C_ax + net.C_ay;
    m(1, 1) = net.C_b + net.C_ab + net.C_bx + net.C_by;
    m(2, 2) = net.C_x + net.C_ax + net.C_bx + net.C_xy;
    m(3, 3) = net.C_y + net.C_ay + net.C_by + net.C_xy;
    m(0, 1) = m(1, 0) = -net.C_ab;
    m(0, 2) = m(2, 0) = -net.C_ax;
    m(0, 3) = m(3, 0) = -net.C_ay;
    m(1, 2) = m(2, 1) = -net.C_bx;
    m(1, 3) = m(3, 1) = -net.C_by;
    m(2, 3) = m(3, 2) = -net.C_xy;
    return m;
}

Eigen::Matrix4d capacitance_inverse_exact(const CapacitanceNetwork &net) {
    return capacitance_matrix(net).inverse();
}

Eigen::Matrix4d capacitance_adjugate_approx(const CapacitanceNetwork &net) {
    net.validate_capacitances();
    Eigen::Matrix4d adj;
    adj(0, 0) = net.C_b * net.C_x * net.C_y;
    adj(1, 1) = net.C_a * net.C_x * net.C_y;
    adj(2, 2) = net.C_a * net.C_b * net.C_y;
    adj(3, 3) = net.C_a * net.C_b * net.C_x;
    adj(0, 1) = net.C_ab * net.C_x * net.C_y + net.C_ax * net.C_bx * net.C_y +
                net.C_ay * net.C_by * net.C_x;
    adj(0, 2) = net.C_b * net.C_y * net.C_ax;
    adj(0, 3) = net.C_b * net.C_x * net.C_ay;
    adj(1, 2) = net.C_a * net.C_y * net.C_bx;
    adj(1, 3) = net.C_a * net.C_x * net.C_by;
    adj(2, 3) = net.C_xy * net.C_a * net.C_b + net.C_a * net.C_bx * net.C_by +
                net.C_b * net.C_ax * net.C_ay;
    adj(1, 0) = adj(0, 1);
    adj(2, 0) = adj(0, 2);
    adj(3, 0) = adj(0, 3);
    adj(2, 1) = adj(1, 2);
    adj(3, 1) = adj(1, 3);
    adj(3, 2) = adj(2, 3);
    return adj;
}

Eigen::Matrix4d capacitance_inverse_approx(const CapacitanceNetwork &net) {
    const double det = net.C_a * net.C_b * net.C_x * net.C_y;
    return capacitance_adjugate_approx(net) / det;
}

double coupling_qr_ghz(double c_mutual_fF, double c_l_fF, double c_b_fF,
                       double omega_l_ghz, double omega_b_ghz) {
    if (!(c_l_fF > 0.0) || !(c_b_fF > 0.0))
        throw std::domain_error("self capacitances must be positive");
    if (c_mutual_fF < 0.0)
        throw std::domain_error("mutual capacitance must be non-negative");
    return 0.5 * (c_mutual_fF / std::sqrt(c_l_fF * c_b_fF)) *
           std::sqrt(omega_l_ghz * omega_b_ghz);
}

double coupling_ab_ghz(const CapacitanceNetwork &net, double omega_a_ghz,
                       double omega_b_ghz) {
    net.validate_capacitances();
    if (!(net.C_ab > 0.0))
        throw std::domain_error("C_ab must be positive for the bracket form");
    const double bracket = 1.0 + net.C_ax * net.C_bx / (net.C_x * net.C_ab) +
                           net.C_ay * net.C_by / (net.C_y * net.C_ab);
    return 0.5 * (net.C_ab / std::sqrt(net.C_a * net.C_b)) * bracket *
           std::sqrt(omega_a_ghz * omega_b_ghz);
}

double coupling_xy_ghz(const CapacitanceNetwork &net, double omega_x_ghz,
                       double omega_y_ghz) {
    net.validate_capacitances();
    if (!(net.C_xy > 0.0))
        throw std::domain_error("C_xy must be positive for the bracket form");
    const double bracket = 1.0 + net.C_ax * net.C_ay / (net.C_a * net.C_xy) +
                           net.C_bx * net.C_by / (net.C_b * net.C_xy);
    return 0.5 * (net.C_xy / std::sqrt(net.C_x * net.C_y)) * bracket *
           std::sqrt(omega_x_ghz * omega_y_ghz);
}

CircuitParams params_from_network(const CapacitanceNetwork &net) {
    net.validate_elements();

    CircuitParams p;
    p.omega_a = resonator_frequency_ghz(net.L_a, net.C_a);
    p.omega_b = resonator_frequency_ghz(net.L_b, net.C_b);

    const double ec_x = charging_energy_ghz(net.C_x);
    const double ec_y = charging_energy_ghz(net.C_y);
    bool shallow_x = false, shallow_y = false;
    p.omega_x_max = qubit_frequency_ghz(net.EJ_x, ec_x, &shallow_x);
    p.omega_y_max = qubit_frequency_ghz(net.EJ_y, ec_y, &shallow_y);
    p.alpha_x = -ec_x;
    p.alpha_y = -ec_y;

    p.g_ax = coupling_qr_ghz(net.C_ax, net.C_a, net.C_x, p.omega_a, p.omega_x_max);
    p.g_ay = coupling_qr_ghz(net.C_ay, net.C_a, net.C_y, p.omega_a, p.omega_y_max);
    p.g_bx = coupling_qr_ghz(net.C_bx, net.C_b, net.C_x, p.omega_b, p.omega_x_max);
    p.g_by = coupling_qr_ghz(net.C_by, net.C_b, net.C_y, p.omega_b, p.omega_y_max);
    p.g_ab = net.C_ab > 0.0 ? coupling_ab_ghz(net, p.omega_a, p.omega_b) : 0.0;
    p.g_xy = net.C_xy > 0.0 ? coupling_xy_ghz(net, p.omega_x_max, p.omega_y_max) : 0.0;

    p.validate();

    if (shallow_x)
        p.warnings.push_back("qubit x: EJ/EC below 20 (transmon formula loses accuracy)");
    if (shallow_y)
        p.warnings.push_back("qubit y: EJ/EC below 20 (transmon formula loses accuracy)");

    // Capacitance-scale hierarchy assumed by the adjugate approximation:
    // C_ab << C_xy << C_{qubit-resonator} << C_x,C_y << C_a,C_b.
    const double qr_min = std::min({net.C_ax, net.C_ay, net.C_bx, net.C_by});
    const double qr_max = std::max({net.C_ax, net.C_ay, net.C_bx, net.C_by});
    const double self_q_min = std::min(net.C_x, net.C_y);
    const double self_q_max = std::max(net.C_x, net.C_y);
    const double self_r_min = std::min(net.C_a, net.C_b);
    auto much_less = [](double small, double large) { return small * 5.0 <= large; };
    if (!(much_less(net.C_ab, net.C_xy) && much_less(net.C_xy, qr_min) &&
          much_less(qr_max, self_q_min) && much_less(self_q_max, self_r_min)))
        p.warnings.push_back("capacitance scales do not honour the assumed hierarchy");

    return p;
}

} // namespace drc
