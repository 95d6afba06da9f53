#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "drcoupler.h"

using Catch::Matchers::WithinAbs;

namespace {

struct ParamsGuard {
    drc_params *p = nullptr;
    ~ParamsGuard() { drc_params_free(p); }
};

struct DatasetGuard {
    drc_dataset *d = nullptr;
    ~DatasetGuard() { drc_dataset_free(d); }
};

drc_params *must_default() {
    drc_params *p = nullptr;
    REQUIRE(drc_params_default(&p) == DRC_OK);
    REQUIRE(p != nullptr);
    return p;
}

} // namespace

TEST_CASE("status names are stable strings") {
    CHECK(std::string(drc_status_name(DRC_OK)) == "DRC_OK");
    CHECK(std::string(drc_status_name(DRC_ERR_INVALID_ARGUMENT)) ==
          "DRC_ERR_INVALID_ARGUMENT");
    CHECK(std::string(drc_status_name(DRC_ERR_PARSE)) == "DRC_ERR_PARSE");
    CHECK(std::string(drc_status_name(DRC_ERR_DOMAIN)) == "DRC_ERR_DOMAIN");
    CHECK(std::string(drc_status_name(DRC_ERR_NUMERIC)) == "DRC_ERR_NUMERIC");
    CHECK(std::string(drc_status_name(DRC_ERR_IO)) == "DRC_ERR_IO");
}

TEST_CASE("default params expose the baseline device") {
    ParamsGuard g{must_default()};
    double v = 0.0;
    REQUIRE(drc_params_get(g.p, "g_xy_mhz", &v) == DRC_OK);
    CHECK_THAT(v, WithinAbs(1.0, 1e-12));
    REQUIRE(drc_params_get(g.p, "omega_a_ghz", &v) == DRC_OK);
    CHECK(v == 4.10);
    REQUIRE(drc_params_get(g.p, "alpha_y_mhz", &v) == DRC_OK);
    CHECK_THAT(v, WithinAbs(-195.0, 1e-9));
}

TEST_CASE("set and get round-trip in key units") {
    ParamsGuard g{must_default()};
    REQUIRE(drc_params_set(g.p, "g_bx_mhz", 28.0) == DRC_OK);
    double v = 0.0;
    REQUIRE(drc_params_get(g.p, "g_bx_mhz", &v) == DRC_OK);
    CHECK_THAT(v, WithinAbs(28.0, 1e-12));
}

TEST_CASE("bad keys and bad values report typed failures") {
    ParamsGuard g{must_default()};
    double v = 0.0;
    CHECK(drc_params_get(g.p, "bogus_key", &v) == DRC_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(drc_last_error()) > 0);
    CHECK(drc_params_set(g.p, "bogus_key", 1.0) == DRC_ERR_INVALID_ARGUMENT);

    CHECK(drc_params_set(g.p, "omega_a_ghz", -1.0) == DRC_ERR_DOMAIN);
    // the handle stays usable with its previous value
    REQUIRE(drc_params_get(g.p, "omega_a_ghz", &v) == DRC_OK);
    CHECK(v == 4.10);

    CHECK(drc_params_set(nullptr, "omega_a_ghz", 4.0) ==
          DRC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("params from string, parse failures, and io failures") {
    drc_params *p = nullptr;
    REQUIRE(drc_params_from_string("g_xy_mhz = 2.5\n", &p) == DRC_OK);
    ParamsGuard g{p};
    double v = 0.0;
    REQUIRE(drc_params_get(g.p, "g_xy_mhz", &v) == DRC_OK);
    CHECK_THAT(v, WithinAbs(2.5, 1e-12));

    drc_params *bad = nullptr;
    CHECK(drc_params_from_string("omega_a_ghz = 1\nomega_a_ghz = 2\n", &bad) ==
          DRC_ERR_PARSE);
    CHECK(bad == nullptr);
    CHECK(std::string(drc_last_error()).find("duplicate") != std::string::npos);

    CHECK(drc_params_from_file("/nonexistent/device.cfg", &bad) == DRC_ERR_IO);
    CHECK(bad == nullptr);
}

TEST_CASE("params load from a config file") {
    const std::string path = "test_capi_params.cfg";
    {
        std::ofstream f(path);
        f << "omega_b_ghz = 5.3\n";
    }
    drc_params *p = nullptr;
    REQUIRE(drc_params_from_file(path.c_str(), &p) == DRC_OK);
    ParamsGuard g{p};
    double v = 0.0;
    REQUIRE(drc_params_get(g.p, "omega_b_ghz", &v) == DRC_OK);
    CHECK(v == 5.3);
    std::remove(path.c_str());
}

TEST_CASE("clones are independent") {
    ParamsGuard a{must_default()};
    drc_params *copy = nullptr;
    REQUIRE(drc_params_clone(a.p, &copy) == DRC_OK);
    ParamsGuard b{copy};
    REQUIRE(drc_params_set(b.p, "g_xy_mhz", 3.0) == DRC_OK);
    double va = 0.0, vb = 0.0;
    REQUIRE(drc_params_get(a.p, "g_xy_mhz", &va) == DRC_OK);
    REQUIRE(drc_params_get(b.p, "g_xy_mhz", &vb) == DRC_OK);
    CHECK_THAT(va, WithinAbs(1.0, 1e-12));
    CHECK_THAT(vb, WithinAbs(3.0, 1e-12));
}

TEST_CASE("warnings surface through the handle") {
    ParamsGuard g{must_default()};
    size_t n = 0;
    REQUIRE(drc_params_warning_count(g.p, &n) == DRC_OK);
    CHECK(n == 0);
    REQUIRE(drc_params_set(g.p, "g_xy_mhz", 7.0) == DRC_OK); // breaks hierarchy
    REQUIRE(drc_params_warning_count(g.p, &n) == DRC_OK);
    REQUIRE(n >= 1);
    const char *text = nullptr;
    REQUIRE(drc_params_warning(g.p, 0, &text) == DRC_OK);
    CHECK(std::strlen(text) > 0);
    CHECK(drc_params_warning(g.p, n, &text) == DRC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("flux tuning through the C surface") {
    ParamsGuard g{must_default()};
    double omega = 0.0;
    REQUIRE(drc_flux_frequency(g.p, 'x', 0.0, &omega) == DRC_OK);
    CHECK(omega == 4.56);
    REQUIRE(drc_flux_frequency(g.p, 'y', 0.0, &omega) == DRC_OK);
    CHECK(omega == 5.12);
    CHECK(drc_flux_frequency(g.p, 'z', 0.0, &omega) == DRC_ERR_INVALID_ARGUMENT);

    double phi = 0.0;
    REQUIRE(drc_flux_for_frequency(g.p, 'x', 4.52, &phi) == DRC_OK);
    REQUIRE(drc_flux_frequency(g.p, 'x', phi, &omega) == DRC_OK);
    CHECK_THAT(omega, WithinAbs(4.52, 1e-11));
    CHECK(drc_flux_for_frequency(g.p, 'x', 4.60, &phi) == DRC_ERR_DOMAIN);
}

TEST_CASE("effective parameters at a frozen bias") {
    ParamsGuard g{must_default()};
    drc_effective_params e;
    REQUIRE(drc_effective(g.p, 4.52, 4.80, &e) == DRC_OK);
    CHECK_THAT(e.g_cr_xy_ghz, WithinAbs(0.000966843899, 1e-12));
    CHECK_THAT(e.g_d_xy_ghz, WithinAbs(0.000955490347, 1e-12));
    CHECK_THAT(e.omega_d_x_ghz, WithinAbs(4.520903179730, 1e-10));
    CHECK(e.dispersive == 1);
    CHECK(e.near_pole == 0);
}

TEST_CASE("analytic zz defaults to the cross-Kerr form") {
    ParamsGuard g{must_default()};
    drc_zz_breakdown full;
    REQUIRE(drc_zz_analytic(g.p, 4.52, 4.42, nullptr, &full) == DRC_OK);
    CHECK_THAT(full.xi_total_ghz, WithinAbs(0.000607402275, 1e-11));
    CHECK_THAT(full.xi2_ghz, WithinAbs(0.000033446328, 1e-11));
    CHECK(full.near_pole == 0);

    drc_zz_options opt{};
    opt.cross_kerr = 0;
    drc_zz_breakdown ladder;
    REQUIRE(drc_zz_analytic(g.p, 4.52, 4.42, &opt, &ladder) == DRC_OK);
    CHECK_THAT(ladder.xi_total_ghz, WithinAbs(0.000608568643, 1e-11));
    CHECK(ladder.xi4c0_x_ghz == 0.0);
    CHECK(ladder.xi4c1_y_ghz == 0.0);

    // hard pole: Delta_xy + alpha_y vanishes at omega_y = 4.715
    CHECK(drc_zz_analytic(g.p, 4.52, 4.715, nullptr, &full) == DRC_ERR_NUMERIC);
}

TEST_CASE("pole listing respects capacity") {
    ParamsGuard g{must_default()};
    double poles[3] = {0, 0, 0};
    size_t count = 0;
    REQUIRE(drc_zz_poles(g.p, 4.52, 4.2, 5.0, poles, 3, &count) == DRC_OK);
    CHECK(count == 5);
    CHECK_THAT(poles[0], WithinAbs(4.295, 1e-12));
    CHECK_THAT(poles[1], WithinAbs(4.345, 1e-12));
    CHECK_THAT(poles[2], WithinAbs(4.52, 1e-12));

    double all[8];
    REQUIRE(drc_zz_poles(g.p, 4.52, 4.2, 5.0, all, 8, &count) == DRC_OK);
    CHECK(count == 5);
    CHECK_THAT(all[3], WithinAbs(4.715, 1e-12));
    CHECK_THAT(all[4], WithinAbs(4.7475, 1e-12));
}

TEST_CASE("spectrum returns ascending labeled levels") {
    ParamsGuard g{must_default()};
    drc_level levels[6];
    REQUIRE(drc_spectrum(g.p, 4.56, 5.12, nullptr, levels, 6) == DRC_OK);
    CHECK(levels[0].occ[0] == 0);
    CHECK(levels[0].occ[1] == 0);
    CHECK(levels[0].occ[2] == 0);
    CHECK(levels[0].occ[3] == 0);
    for (int k = 1; k < 6; ++k)
        CHECK(levels[k].energy_ghz >= levels[k - 1].energy_ghz);
    CHECK(levels[0].overlap > 0.99);
    CHECK(levels[0].hybridized == 0);

    // oversized request is rejected up front
    drc_spectrum_options opt{};
    opt.n_a = opt.n_x = opt.n_y = opt.n_b = 2;
    CHECK(drc_spectrum(g.p, 4.56, 5.12, &opt, levels, 17) ==
          DRC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("numeric zz at the frozen comparison bias") {
    ParamsGuard g{must_default()};
    drc_spectrum_options opt{};
    opt.convention = DRC_CONVENTION_BOSONIC;
    double zz = 0.0;
    int reliable = 0;
    REQUIRE(drc_zz_numeric(g.p, 4.52, 4.80, &opt, &zz, &reliable) == DRC_OK);
    CHECK_THAT(zz, WithinAbs(-5.6420667e-5, 1e-9));
    CHECK(reliable == 1);
}

TEST_CASE("hamiltonian dump writes sparse triplets") {
    ParamsGuard g{must_default()};
    const std::string path = "test_capi_h.csv";
    drc_spectrum_options opt{};
    opt.n_a = opt.n_x = opt.n_y = opt.n_b = 2;
    REQUIRE(drc_hamiltonian_dump(g.p, 4.56, 5.12, &opt, path.c_str()) == DRC_OK);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "row,col,value");
    std::string line;
    size_t lines = 0;
    while (std::getline(f, line))
        ++lines;
    CHECK(lines > 16); // diagonal plus coupling entries
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("zz sweep dataset accessors") {
    ParamsGuard g{must_default()};
    DatasetGuard d;
    REQUIRE(drc_zz_sweep(g.p, 4.52, 4.75, 4.95, 21, nullptr, 0, nullptr, &d.d) ==
            DRC_OK);
    size_t rows = 0, cols = 0;
    REQUIRE(drc_dataset_rows(d.d, &rows) == DRC_OK);
    REQUIRE(drc_dataset_cols(d.d, &cols) == DRC_OK);
    CHECK(rows == 21);
    CHECK(cols == 8);
    const char *name = nullptr;
    REQUIRE(drc_dataset_col_name(d.d, 6, &name) == DRC_OK);
    CHECK(std::string(name) == "xi_total_mhz");
    double v = 0.0;
    REQUIRE(drc_dataset_cell(d.d, 0, 0, &v) == DRC_OK);
    CHECK(v == 4.75);
    CHECK(drc_dataset_cell(d.d, 21, 0, &v) == DRC_ERR_INVALID_ARGUMENT);

    const std::string path = "test_capi_sweep.csv";
    REQUIRE(drc_dataset_write_csv(d.d, path.c_str()) == DRC_OK);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header ==
          "omega_y_ghz,xi2_mhz,xi3_mhz,xi4s_mhz,xi4c0_mhz,xi4c1_mhz,"
          "xi_total_mhz,near_pole");
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("spectrum sweep text cells") {
    ParamsGuard g{must_default()};
    drc_spectrum_options opt{};
    opt.n_a = opt.n_x = opt.n_y = opt.n_b = 2;
    DatasetGuard d;
    REQUIRE(drc_spectrum_sweep(g.p, 0.0, -0.2, 0.2, 3, 2, &opt, &d.d) == DRC_OK);
    size_t rows = 0;
    REQUIRE(drc_dataset_rows(d.d, &rows) == DRC_OK);
    CHECK(rows == 6);
    double v = 0.0;
    CHECK(drc_dataset_cell(d.d, 0, 2, &v) == DRC_ERR_INVALID_ARGUMENT);
    const char *text = nullptr;
    REQUIRE(drc_dataset_cell_text(d.d, 0, 2, &text) == DRC_OK);
    CHECK(std::strlen(text) == 4);
}

TEST_CASE("coupling sweep columns") {
    ParamsGuard g{must_default()};
    DatasetGuard d;
    REQUIRE(drc_coupling_sweep(g.p, 4.56, -0.4, 0.4, 9, &d.d) == DRC_OK);
    size_t cols = 0;
    REQUIRE(drc_dataset_cols(d.d, &cols) == DRC_OK);
    CHECK(cols == 4);
    const char *name = nullptr;
    REQUIRE(drc_dataset_col_name(d.d, 3, &name) == DRC_OK);
    CHECK(std::string(name) == "g_cr_mhz");
}

TEST_CASE("switch-off and zz-zero root finding") {
    ParamsGuard g{must_default()};
    REQUIRE(drc_params_set(g.p, "g_xy_mhz", 0.0) == DRC_OK);
    DatasetGuard d;
    REQUIRE(drc_find_switchoff(g.p, 4.56, DRC_SWITCHOFF_G_CR, 4.2, 5.0, 0,
                               &d.d) == DRC_OK);
    size_t rows = 0;
    REQUIRE(drc_dataset_rows(d.d, &rows) == DRC_OK);
    REQUIRE(rows == 1);
    double root = 0.0;
    REQUIRE(drc_dataset_cell(d.d, 0, 0, &root) == DRC_OK);
    CHECK_THAT(root, WithinAbs(4.749480695, 1e-8));

    ParamsGuard g2{must_default()};
    DatasetGuard z;
    size_t skipped = 0;
    REQUIRE(drc_find_zz_zero(g2.p, 4.0, 4.2, 5.0, 1601, nullptr, &z.d,
                             &skipped) == DRC_OK);
    REQUIRE(drc_dataset_rows(z.d, &rows) == DRC_OK);
    CHECK(rows == 1);
    CHECK(skipped >= 1);
    REQUIRE(drc_dataset_cell(z.d, 0, 0, &root) == DRC_OK);
    CHECK_THAT(root, WithinAbs(4.748684334, 1e-6));
}

TEST_CASE("figure names and validation suite") {
    const char *names = drc_figure_names();
    REQUIRE(names != nullptr);
    CHECK(std::string(names).find("fig2") != std::string::npos);
    CHECK(std::string(names).find("fig10") != std::string::npos);

    DatasetGuard v;
    CHECK(drc_validate(nullptr, &v.d) == DRC_ERR_INVALID_ARGUMENT);
    ParamsGuard g{must_default()};
    REQUIRE(drc_validate(g.p, &v.d) == DRC_OK);
    size_t rows = 0, cols = 0;
    REQUIRE(drc_dataset_rows(v.d, &rows) == DRC_OK);
    REQUIRE(drc_dataset_cols(v.d, &cols) == DRC_OK);
    CHECK(rows >= 5);
    CHECK(cols == 5);
    const char *name = nullptr;
    REQUIRE(drc_dataset_col_name(v.d, 0, &name) == DRC_OK);
    CHECK(std::string(name) == "check");
    for (size_t r = 0; r < rows; ++r) {
        double passed = -1.0;
        REQUIRE(drc_dataset_cell(v.d, r, 1, &passed) == DRC_OK);
        CHECK(passed == 1.0);
    }
}
