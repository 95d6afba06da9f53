#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "core/spectrum.hpp"

using namespace drc;
using Catch::Matchers::WithinAbs;

namespace {

SpectrumOptions bosonic() {
    SpectrumOptions o;
    o.convention = Convention::Bosonic;
    return o;
}

} // namespace

TEST_CASE("labeled spectrum structure") {
    const CircuitParams p = CircuitParams::baseline();
    const Spectrum s = labeled_spectrum(p, 4.56, 5.12, bosonic());

    REQUIRE(s.levels.size() == 144);
    // energies ascend and labels are a permutation of the basis
    std::set<int> seen;
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
        if (k > 0)
            CHECK(s.levels[k].energy_ghz >= s.levels[k - 1].energy_ghz);
        seen.insert(flat_index(s.trunc, s.levels[k].occ));
    }
    CHECK(seen.size() == 144);

    // eigenvectors are orthonormal
    const Eigen::MatrixXd G = s.vectors.transpose() * s.vectors;
    REQUIRE((G - Eigen::MatrixXd::Identity(144, 144)).cwiseAbs().maxCoeff() <
            1e-9);
    // trace preserved by diagonalization
    REQUIRE_THAT(s.energies.sum(),
                 WithinAbs(build_hamiltonian(p, 4.56, 5.12, bosonic()).trace(),
                           1e-8));
}

TEST_CASE("frozen idle-point energies and overlaps") {
    const CircuitParams p = CircuitParams::baseline();
    const Spectrum s = labeled_spectrum(p, 4.56, 5.12, bosonic());

    const auto e = [&](const Occupation &occ) {
        auto lvl = s.find(occ);
        REQUIRE(lvl.has_value());
        return lvl->energy_ghz;
    };
    // counter-rotating terms push the vacuum slightly down
    REQUIRE_THAT(e({0, 0, 0, 0}), WithinAbs(-0.000409, 5e-6));
    REQUIRE_THAT(e({0, 1, 0, 0}), WithinAbs(4.560183, 5e-6));
    REQUIRE_THAT(e({0, 0, 1, 0}), WithinAbs(5.110411, 5e-6));
    REQUIRE_THAT(e({0, 1, 1, 0}), WithinAbs(9.670946, 5e-6));

    const auto ov = [&](const Occupation &occ) {
        return s.find(occ)->overlap;
    };
    REQUIRE_THAT(ov({0, 1, 0, 0}), WithinAbs(0.99298791, 1e-6));
    CHECK(ov({0, 1, 0, 0}) > 0.9);
    // |0010> hybridizes with the nearby resonator b
    REQUIRE_THAT(ov({0, 0, 1, 0}), WithinAbs(0.89967448, 1e-6));
    CHECK(ov({0, 0, 1, 0}) > 0.85);
    CHECK(!s.find({0, 1, 0, 0})->hybridized);
}

TEST_CASE("frozen idle dispersive shifts stay under 12 MHz") {
    const CircuitParams p = CircuitParams::baseline();
    const Spectrum s = labeled_spectrum(p, 4.56, 5.12, bosonic());
    const double sx = s.find({0, 1, 0, 0})->energy_ghz - 4.56;
    const double sy = s.find({0, 0, 1, 0})->energy_ghz - 5.12;
    const double sa = s.find({1, 0, 0, 0})->energy_ghz - 4.10;
    const double sb = s.find({0, 0, 0, 1})->energy_ghz - 5.20;
    REQUIRE_THAT(sx * 1e3, WithinAbs(0.1827, 0.005));
    REQUIRE_THAT(sy * 1e3, WithinAbs(-9.5889, 0.005));
    REQUIRE_THAT(sa * 1e3, WithinAbs(-3.8546, 0.005));
    REQUIRE_THAT(sb * 1e3, WithinAbs(10.7918, 0.005));
    for (double v : {sx, sy, sa, sb})
        CHECK(std::abs(v) < 0.012);
}

TEST_CASE("zero coupling gives exact bare labels") {
    CircuitParams p = CircuitParams::baseline();
    p.g_ax = p.g_ay = p.g_bx = p.g_by = p.g_xy = p.g_ab = 0.0;
    p.validate();
    const Spectrum s = labeled_spectrum(p, 4.56, 5.12, bosonic());
    for (const Level &lvl : s.levels) {
        CHECK(lvl.overlap >= 1.0 - 1e-12);
        CHECK(!lvl.hybridized);
    }
    REQUIRE_THAT(s.find({0, 2, 0, 0})->energy_ghz,
                 WithinAbs(2 * 4.56 - 0.175, 1e-12));
    const ZZNumeric zz = zz_numeric(p, 4.56, 5.12, bosonic());
    REQUIRE_THAT(zz.zz_ghz, WithinAbs(0.0, 1e-12));
    CHECK(zz.reliable);
}

TEST_CASE("frozen numeric ZZ values") {
    const CircuitParams p = CircuitParams::baseline();

    ZZNumeric z = zz_numeric(p, 4.52, 4.80, bosonic());
    REQUIRE_THAT(z.zz_ghz * 1e3, WithinAbs(-0.056420667, 1e-6));
    CHECK(z.reliable);

    z = zz_numeric(p, 4.52, 4.72, bosonic());
    REQUIRE_THAT(z.zz_ghz * 1e3, WithinAbs(-0.883325469, 1e-6));
    CHECK(z.reliable);

    z = zz_numeric(p, 4.56, 5.12, bosonic());
    REQUIRE_THAT(z.zz_ghz * 1e3, WithinAbs(-0.056856981, 1e-6));
    CHECK(z.reliable);
}

TEST_CASE("rwa ground state sits exactly at zero") {
    const CircuitParams p = CircuitParams::baseline();
    SpectrumOptions o = bosonic();
    o.rwa = true;
    const Spectrum s = labeled_spectrum(p, 4.56, 5.12, o);
    REQUIRE_THAT(s.find({0, 0, 0, 0})->energy_ghz, WithinAbs(0.0, 1e-12));
}

TEST_CASE("pair gap matches the two-level closed form") {
    // only g_by couples, RWA: the single-excitation block is exactly 2x2
    CircuitParams p = CircuitParams::baseline();
    p.g_ax = p.g_ay = p.g_bx = p.g_xy = p.g_ab = 0.0;
    p.validate();
    SpectrumOptions o = bosonic();
    o.rwa = true;

    const double delta = 5.20 - 5.00;
    const double expected =
        std::sqrt(delta * delta + 4.0 * p.g_by * p.g_by);
    const double gap =
        pair_gap_ghz(p, 4.56, 5.00, {0, 0, 1, 0}, {0, 0, 0, 1}, o);
    REQUIRE_THAT(gap, WithinAbs(expected, 1e-12));

    // resonant case: the splitting collapses to 2g
    const double gap_res =
        pair_gap_ghz(p, 4.56, 5.20, {0, 0, 1, 0}, {0, 0, 0, 1}, o);
    REQUIRE_THAT(gap_res, WithinAbs(2.0 * p.g_by, 1e-12));
}

TEST_CASE("level sweep tracks curves continuously") {
    const CircuitParams p = CircuitParams::baseline();
    SpectrumOptions o = bosonic();
    o.trunc = Truncation{2, 2, 2, 2};
    const LevelSweep sweep = sweep_levels(p, 0.0, -0.3, 0.3, 7, o);

    REQUIRE(sweep.phi.size() == 7);
    REQUIRE(sweep.points.size() == 7);
    REQUIRE(sweep.track.size() == 7);
    CHECK(sweep.phi.front() == -0.3);
    CHECK(sweep.phi.back() == 0.3);
    // flux law applied at every point
    for (std::size_t k = 0; k < sweep.phi.size(); ++k) {
        CHECK(sweep.omega_x[k] == flux_frequency(4.56, -0.175, 0.0));
        REQUIRE_THAT(sweep.omega_y[k],
                     WithinAbs(flux_frequency(5.12, -0.195, sweep.phi[k]),
                               1e-12));
    }
    // each tracked column is a valid permutation of level indices
    for (const auto &row : sweep.track) {
        REQUIRE(row.size() == 16);
        std::set<int> uniq(row.begin(), row.end());
        CHECK(uniq.size() == 16);
        CHECK(*uniq.begin() >= 0);
        CHECK(*uniq.rbegin() < 16);
    }
}
