#include "core/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace drc {

void Truncation::validate() const {
    for (int n : {n_a, n_x, n_y, n_b})
        if (n < 2 || n > 9)
            throw std::invalid_argument("levels per mode must be in 2..9");
    if (dim() > 4096)
        throw std::invalid_argument("truncated space exceeds 4096 states");
}

std::string Occupation::label() const {
    std::string s(4, '0');
    s[0] = static_cast<char>('0' + a);
    s[1] = static_cast<char>('0' + x);
    s[2] = static_cast<char>('0' + y);
    s[3] = static_cast<char>('0' + b);
    return s;
}

int flat_index(const Truncation &t, const Occupation &occ) {
    return ((occ.a * t.n_x + occ.x) * t.n_y + occ.y) * t.n_b + occ.b;
}

Occupation occupation_of(const Truncation &t, int index) {
    Occupation occ;
    occ.b = index % t.n_b;
    index /= t.n_b;
    occ.y = index % t.n_y;
    index /= t.n_y;
    occ.x = index % t.n_x;
    occ.a = index / t.n_x;
    return occ;
}

namespace {

// Lowering ladder of one mode: <m-1|L|m>.  Resonators are always bosonic;
// qubits follow the requested convention.
Eigen::MatrixXd lowering(int levels, bool qubit, Convention convention) {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(levels, levels);
    for (int m = 1; m < levels; ++m)
        l(m - 1, m) = (qubit && convention == Convention::Uniform)
                          ? 1.0
                          : std::sqrt(static_cast<double>(m));
    return l;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Lift a single-mode operator to the four-mode product space.
Eigen::MatrixXd on_mode(const std::array<int, 4> &dims, int mode,
                        const Eigen::MatrixXd &op) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (int m = 0; m < 4; ++m) {
        if (m == mode)
            out = kron(out, op);
        else
            out = kron(out, Eigen::MatrixXd::Identity(dims[m], dims[m]));
    }
    return out;
}

} // namespace

Eigen::MatrixXd build_hamiltonian(const CircuitParams &params, double omega_x_ghz,
                                  double omega_y_ghz, const SpectrumOptions &options) {
    options.trunc.validate();
    const Truncation &t = options.trunc;
    const std::array<int, 4> dims = {t.n_a, t.n_x, t.n_y, t.n_b};
    const std::array<bool, 4> is_qubit = {false, true, true, false};
    const std::array<double, 4> omega = {params.omega_a, omega_x_ghz, omega_y_ghz,
                                         params.omega_b};
    const std::array<double, 4> alpha = {0.0, params.alpha_x, params.alpha_y, 0.0};

    const int dim = t.dim();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

    // Diagonal mode energies.
    for (int i = 0; i < dim; ++i) {
        const Occupation occ = occupation_of(t, i);
        const std::array<int, 4> m = {occ.a, occ.x, occ.y, occ.b};
        double e = 0.0;
        for (int k = 0; k < 4; ++k)
            e += omega[k] * m[k] + 0.5 * alpha[k] * m[k] * (m[k] - 1);
        h(i, i) = e;
    }

    // Pairwise couplings.
    std::array<Eigen::MatrixXd, 4> low;
    for (int k = 0; k < 4; ++k)
        low[k] = on_mode(dims, k, lowering(dims[k], is_qubit[k], options.convention));

    struct Pair {
        int i, j;
        double g;
    };
    const std::array<Pair, 6> pairs = {{{0, 1, params.g_ax},
                                        {0, 2, params.g_ay},
                                        {1, 3, params.g_bx},
                                        {2, 3, params.g_by},
                                        {1, 2, params.g_xy},
                                        {0, 3, params.g_ab}}};
    for (const Pair &p : pairs) {
        if (p.g == 0.0)
            continue;
        const Eigen::MatrixXd &li = low[p.i];
        const Eigen::MatrixXd &lj = low[p.j];
        const Eigen::MatrixXd exchange = li.transpose() * lj + li * lj.transpose();
        if (options.rwa) {
            h += p.g * exchange;
        } else {
            const Eigen::MatrixXd counter = li.transpose() * lj.transpose() + li * lj;
            h += p.g * (exchange - counter);
        }
    }
    return h;
}

} // namespace drc
