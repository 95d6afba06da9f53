#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/network.hpp"

using namespace drc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("empty text yields the baseline device") {
    const CircuitParams p = parse_config_text("");
    const CircuitParams b = CircuitParams::baseline();
    CHECK(p.omega_a == b.omega_a);
    CHECK(p.omega_b == b.omega_b);
    CHECK(p.omega_x_max == b.omega_x_max);
    CHECK(p.omega_y_max == b.omega_y_max);
    CHECK(p.alpha_x == b.alpha_x);
    CHECK(p.alpha_y == b.alpha_y);
    CHECK(p.g_ax == b.g_ax);
    CHECK(p.g_xy == b.g_xy);
}

TEST_CASE("single override keeps all other defaults") {
    const CircuitParams p = parse_config_text("g_xy_mhz = 2.5\n");
    CHECK_THAT(p.g_xy, WithinAbs(0.0025, 1e-15));
    const CircuitParams b = CircuitParams::baseline();
    CHECK(p.omega_a == b.omega_a);
    CHECK(p.g_ax == b.g_ax);
    CHECK(p.alpha_y == b.alpha_y);
}

TEST_CASE("comments, blank lines, and whitespace are tolerated") {
    const std::string text = "# device overrides\n"
                             "\n"
                             "   omega_a_ghz =  4.2   # retuned resonator\n"
                             "\t\n"
                             "alpha_x_mhz=-180\n";
    const CircuitParams p = parse_config_text(text);
    CHECK_THAT(p.omega_a, WithinAbs(4.2, 1e-15));
    CHECK_THAT(p.alpha_x, WithinAbs(-0.180, 1e-15));
    CHECK(p.omega_b == CircuitParams::baseline().omega_b);
}

TEST_CASE("duplicate keys are rejected with both line numbers") {
    const std::string text = "omega_a_ghz = 4.2\n"
                             "g_xy_mhz = 1.0\n"
                             "omega_a_ghz = 4.3\n";
    try {
        parse_config_text(text);
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate key 'omega_a_ghz'") !=
              std::string::npos);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("unknown and malformed lines are rejected") {
    CHECK_THROWS_AS(parse_config_text("omega_q_ghz = 4.0\n"), parse_error);
    CHECK_THROWS_AS(parse_config_text("no equals here\n"), parse_error);
    CHECK_THROWS_AS(parse_config_text("= 4.0\n"), parse_error);
    CHECK_THROWS_AS(parse_config_text("omega_a_ghz = 4.1 = 4.2\n"), parse_error);
    CHECK_THROWS_AS(parse_config_text("omega_a_ghz = 4.1abc\n"), parse_error);
    CHECK_THROWS_AS(parse_config_text("omega_a_ghz =\n"), parse_error);

    try {
        parse_config_text("# ok\nomega_a_ghz = 4.1abc\n");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("cannot parse number") !=
              std::string::npos);
    }
}

namespace {

std::string network_text() {
    return "C_a_fF = 900\n"
           "C_b_fF = 900\n"
           "C_x_fF = 90\n"
           "C_y_fF = 90\n"
           "C_ab_fF = 0.01\n"
           "C_xy_fF = 0.1\n"
           "C_ax_fF = 4\n"
           "C_ay_fF = 4\n"
           "C_bx_fF = 4\n"
           "C_by_fF = 4\n"
           "L_a_nH = 1.5\n"
           "L_b_nH = 1.0\n"
           "EJ_x_ghz = 18\n"
           "EJ_y_ghz = 22\n";
}

CapacitanceNetwork network_struct() {
    CapacitanceNetwork net;
    net.C_a = 900.0;
    net.C_b = 900.0;
    net.C_x = 90.0;
    net.C_y = 90.0;
    net.C_ab = 0.01;
    net.C_xy = 0.1;
    net.C_ax = 4.0;
    net.C_ay = 4.0;
    net.C_bx = 4.0;
    net.C_by = 4.0;
    net.L_a = 1.5;
    net.L_b = 1.0;
    net.EJ_x = 18.0;
    net.EJ_y = 22.0;
    return net;
}

} // namespace

TEST_CASE("network block matches the direct derivation") {
    const CircuitParams p = parse_config_text(network_text());
    const CircuitParams q = params_from_network(network_struct());
    CHECK(p.omega_a == q.omega_a);
    CHECK(p.omega_b == q.omega_b);
    CHECK(p.omega_x_max == q.omega_x_max);
    CHECK(p.omega_y_max == q.omega_y_max);
    CHECK(p.alpha_x == q.alpha_x);
    CHECK(p.alpha_y == q.alpha_y);
    CHECK(p.g_ax == q.g_ax);
    CHECK(p.g_ay == q.g_ay);
    CHECK(p.g_bx == q.g_bx);
    CHECK(p.g_by == q.g_by);
    CHECK(p.g_xy == q.g_xy);
    CHECK(p.g_ab == q.g_ab);
}

TEST_CASE("network and circuit keys cannot be mixed") {
    try {
        parse_config_text("C_a_fF = 900\nomega_a_ghz = 4.1\n");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("cannot be mixed") != std::string::npos);
    }
    try {
        parse_config_text("omega_a_ghz = 4.1\nC_a_fF = 900\n");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("cannot be mixed") != std::string::npos);
    }
}

TEST_CASE("incomplete network block names the missing keys") {
    try {
        parse_config_text("C_a_fF = 900\nL_a_nH = 1.5\n");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        const std::string msg = e.what();
        CHECK(msg.find("incomplete network block") != std::string::npos);
        CHECK(msg.find("EJ_x_ghz") != std::string::npos);
        CHECK(msg.find("C_by_fF") != std::string::npos);
    }
}

TEST_CASE("single-key set and get use the documented units") {
    CircuitParams p = CircuitParams::baseline();
    params_set_key(p, "alpha_x_mhz", -180.0);
    CHECK_THAT(p.alpha_x, WithinAbs(-0.180, 1e-15));
    CHECK_THAT(params_get_key(p, "alpha_x_mhz"), WithinAbs(-180.0, 1e-12));
    params_set_key(p, "omega_a_ghz", 4.25);
    CHECK(p.omega_a == 4.25);
    CHECK(params_get_key(p, "omega_a_ghz") == 4.25);

    CHECK_THROWS_AS(params_set_key(p, "bogus", 1.0), std::invalid_argument);
    CHECK_THROWS_AS(params_get_key(p, "bogus"), std::invalid_argument);
    CHECK_THROWS_AS(params_set_key(p, "omega_a_ghz", -1.0), std::domain_error);
}

TEST_CASE("the canonical key list is complete and usable") {
    const auto &keys = direct_config_keys();
    REQUIRE(keys.size() == 12);
    CircuitParams p = CircuitParams::baseline();
    for (const std::string &k : keys) {
        const double v = params_get_key(p, k);
        params_set_key(p, k, v); // round-trip every key at its baseline value
        // MHz <-> GHz conversion costs at most one ulp each way
        CHECK_THAT(params_get_key(p, k), WithinAbs(v, 1e-9));
    }
    std::string text;
    for (const std::string &k : keys)
        text += k + " = " + std::to_string(params_get_key(p, k)) + "\n";
    CHECK_NOTHROW(parse_config_text(text));
}

TEST_CASE("config files load and missing files raise io_error") {
    CHECK_THROWS_AS(load_config_file("/nonexistent/dir/device.cfg"), io_error);

    const std::string path = "test_config_roundtrip.cfg";
    {
        std::ofstream f(path);
        f << "omega_a_ghz = 4.17\n# trailing comment\n";
    }
    const CircuitParams p = load_config_file(path);
    CHECK_THAT(p.omega_a, WithinAbs(4.17, 1e-15));
    std::remove(path.c_str());
}
