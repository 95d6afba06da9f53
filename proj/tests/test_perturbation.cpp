#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "core/error.hpp"
#include "core/perturbation.hpp"

using namespace drc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("detuning bookkeeping") {
    const CircuitParams p = CircuitParams::baseline();
    const DetuningSet d = DetuningSet::from(p, 4.52, 4.80);

    CHECK(d.omega_x == 4.52);
    CHECK(d.omega_y == 4.80);
    REQUIRE_THAT(d.delta[0][0], WithinAbs(4.52 - 4.10, 1e-12)); // (a, x)
    REQUIRE_THAT(d.delta[0][1], WithinAbs(4.80 - 4.10, 1e-12)); // (a, y)
    REQUIRE_THAT(d.delta[1][0], WithinAbs(4.52 - 5.20, 1e-12)); // (b, x)
    REQUIRE_THAT(d.delta[1][1], WithinAbs(4.80 - 5.20, 1e-12)); // (b, y)
    REQUIRE_THAT(d.sigma[0][0], WithinAbs(4.52 + 4.10, 1e-12));
    REQUIRE_THAT(d.delta_xy, WithinAbs(0.28, 1e-12));
    REQUIRE_THAT(d.sigma_xy, WithinAbs(9.32, 1e-12));
    REQUIRE_THAT(d.delta_ab, WithinAbs(1.10, 1e-12));
    CHECK(d.pair_dispersive[0][0]);
    CHECK(d.pair_dispersive[0][1]);
    CHECK(d.pair_dispersive[1][0]);
    CHECK(d.pair_dispersive[1][1]);
    CHECK(d.dispersive);

    // close to resonator a the (a, x) pair stops being dispersive
    const DetuningSet near = DetuningSet::from(p, 4.20, 4.80);
    CHECK(!near.pair_dispersive[0][0]);
    CHECK(!near.dispersive);
}

TEST_CASE("frozen effective parameters at (4.52, 4.80)") {
    const CircuitParams p = CircuitParams::baseline();
    const EffectiveParams e = effective_params(p, 4.52, 4.80);

    REQUIRE_THAT(e.omega_d_x, WithinAbs(4.520903179730, 1e-10));
    REQUIRE_THAT(e.omega_d_y, WithinAbs(4.799007800963, 1e-10));
    REQUIRE_THAT(e.omega_d_a, WithinAbs(4.096332897302, 1e-10));
    REQUIRE_THAT(e.omega_d_b, WithinAbs(5.203756122004, 1e-10));
    REQUIRE_THAT(e.g_in_a, WithinAbs(0.001833551349, 1e-12));
    REQUIRE_THAT(e.g_in_b, WithinAbs(-0.001878061002, 1e-12));
    REQUIRE_THAT(e.g_d_xy, WithinAbs(0.000955490347, 1e-12));
    REQUIRE_THAT(e.g_d_ab, WithinAbs(-0.000184310679, 1e-12));
    REQUIRE_THAT(e.dw_x, WithinAbs(-0.001360565951, 1e-12));
    REQUIRE_THAT(e.dw_y, WithinAbs(-0.001508661098, 1e-12));
    REQUIRE_THAT(e.omega_cr_x, WithinAbs(4.519542613779, 1e-10));
    REQUIRE_THAT(e.omega_cr_y, WithinAbs(4.797499139865, 1e-10));
    REQUIRE_THAT(e.g_cr_xy, WithinAbs(0.000966843899, 1e-12));
    CHECK(e.dispersive);
    CHECK(!e.near_pole);
}

TEST_CASE("frozen indirect couplings at the resonant point") {
    const CircuitParams p = CircuitParams::baseline();
    const EffectiveParams e = effective_params(p, 4.56, 4.56);
    REQUIRE_THAT(e.g_in_a * 1e3, WithinAbs(2.10784, 1e-4));
    REQUIRE_THAT(e.g_d_xy * 1e3, WithinAbs(1.6093790, 1e-5));

    CircuitParams p0 = p;
    p0.g_xy = 0.0;
    p0.validate();
    REQUIRE_THAT(effective_coupling_g_d(p0, 4.56, 4.56) * 1e3,
                 WithinAbs(0.6094, 1e-3));
}

TEST_CASE("frozen high-excitation corrections at idle") {
    const CircuitParams p = CircuitParams::baseline();
    REQUIRE_THAT(high_excited_shift(p, 4.56, 5.12, Qubit::Y) * 1e3,
                 WithinAbs(-27.617798, 1e-4));
    REQUIRE_THAT(high_excited_shift(p, 4.56, 5.12, Qubit::X) * 1e3,
                 WithinAbs(-1.2354453, 1e-5));
    // effective resonator-resonator coupling at idle
    const EffectiveParams e = effective_params(p, 4.56, 5.12);
    REQUIRE_THAT(e.g_d_ab * 1e3, WithinAbs(-5.3391134, 1e-5));
}

TEST_CASE("transformed nonlinear coefficients match their closed forms") {
    const CircuitParams p = CircuitParams::baseline();
    const double wx = 4.52, wy = 4.80;
    const double g = p.g_ax, al = p.alpha_x;
    const double delta = wx - p.omega_a, sigma = wx + p.omega_a;

    const NonlinearTerms t =
        nonlinear_terms(p, wx, wy, Resonator::A, Qubit::X);
    REQUIRE_THAT(t.self_kerr,
                 WithinRel(g * g * al *
                               (1.0 / (sigma * sigma) - 1.0 / (delta * delta)),
                           1e-12));
    REQUIRE_THAT(t.cross_normal,
                 WithinRel(2.0 * g * g * al / (delta * delta), 1e-12));
    REQUIRE_THAT(t.cross_anti,
                 WithinRel(2.0 * g * g * al / (sigma * sigma), 1e-12));
    REQUIRE_THAT(t.residual_pair,
                 WithinRel(g * g * al / (2.0 * delta * delta), 1e-12));
    REQUIRE_THAT(t.residual_exchange, WithinRel(g * al / delta, 1e-12));
}

TEST_CASE("high-excitation shift equals the mean cross-Kerr coefficient") {
    const CircuitParams p = CircuitParams::baseline();
    const double wx = 4.56, wy = 5.12;
    const NonlinearTerms ta = nonlinear_terms(p, wx, wy, Resonator::A, Qubit::Y);
    const NonlinearTerms tb = nonlinear_terms(p, wx, wy, Resonator::B, Qubit::Y);
    const double expected = 0.5 * (ta.cross_normal + ta.cross_anti +
                                   tb.cross_normal + tb.cross_anti);
    REQUIRE_THAT(high_excited_shift(p, wx, wy, Qubit::Y),
                 WithinAbs(expected, 1e-15));
}

TEST_CASE("shift scales linearly in the anharmonicity with a fixed sign") {
    CircuitParams p = CircuitParams::baseline();
    const double base = high_excited_shift(p, 4.56, 5.12, Qubit::Y);
    CHECK(base < 0.0); // same sign as alpha_y

    p.alpha_y = 2.0 * p.alpha_y;
    p.validate();
    REQUIRE_THAT(high_excited_shift(p, 4.56, 5.12, Qubit::Y),
                 WithinRel(2.0 * base, 1e-12));
}

TEST_CASE("generalized dispersive shifts") {
    const CircuitParams p = CircuitParams::baseline();
    const double wx = 4.52, wy = 4.80;
    const double g = p.g_ax, al = p.alpha_x;
    const double delta = wx - p.omega_a;

    CHECK(chi_step(p, wx, wy, Resonator::A, Qubit::X, 0) == 0.0);
    REQUIRE_THAT(chi_step(p, wx, wy, Resonator::A, Qubit::X, 1),
                 WithinRel(g * g / delta, 1e-12));
    REQUIRE_THAT(chi_step(p, wx, wy, Resonator::A, Qubit::X, 2),
                 WithinRel(2.0 * g * g / (delta + al), 1e-12));
    REQUIRE_THAT(kappa_level(p, wx, wy, Resonator::A, Qubit::X, 2),
                 WithinRel(chi_step(p, wx, wy, Resonator::A, Qubit::X, 2),
                           1e-15));

    // state pull: difference of neighbouring steps, truncated at the top
    const double c1 = chi_step(p, wx, wy, Resonator::A, Qubit::X, 1);
    const double c2 = chi_step(p, wx, wy, Resonator::A, Qubit::X, 2);
    REQUIRE_THAT(chi_state(p, wx, wy, Resonator::A, Qubit::X, 1, 3),
                 WithinAbs(c1 - c2, 1e-15));
    REQUIRE_THAT(chi_state(p, wx, wy, Resonator::A, Qubit::X, 2, 3),
                 WithinAbs(c2, 1e-15));
}

TEST_CASE("pole guards") {
    const CircuitParams p = CircuitParams::baseline();

    // qubit y exactly on resonator a: hard pole
    CHECK_THROWS_AS(effective_params(p, 4.52, 4.10), pole_error);
    // generalized resonance of the j = 2 step: Delta + alpha = 0
    CHECK_THROWS_AS(
        chi_step(p, 4.10 - p.alpha_x, 4.80, Resonator::A, Qubit::X, 2),
        pole_error);

    // within the 10 MHz soft guard: flagged but evaluated
    const EffectiveParams e = effective_params(p, 4.52, 4.105);
    CHECK(e.near_pole);
    CHECK(std::isfinite(e.g_d_xy));

    // comfortably detuned: no flag
    CHECK(!effective_params(p, 4.52, 4.80).near_pole);
}

TEST_CASE("indirect coupling identity against the closed form") {
    const CircuitParams p = CircuitParams::baseline();
    const DetuningSet d = DetuningSet::from(p, 4.52, 4.80);
    PoleGuard guard;
    const double gin = indirect_coupling(p, d, Resonator::A, guard);
    const double expected =
        0.5 * p.g_ax * p.g_ay *
        (1.0 / d.delta[0][1] + 1.0 / d.delta[0][0] - 1.0 / d.sigma[0][1] -
         1.0 / d.sigma[0][0]);
    REQUIRE_THAT(gin, WithinRel(expected, 1e-12));
    CHECK(!guard.near_pole());
}
