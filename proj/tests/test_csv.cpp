#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/csv.hpp"
#include "core/error.hpp"

using namespace drc;

TEST_CASE("number formatting is compact and round-trips") {
    CHECK(Dataset::format_number(0.0) == "0");
    CHECK(Dataset::format_number(-0.0) == "0");
    CHECK(Dataset::format_number(2.5) == "2.5");
    CHECK(Dataset::format_number(-3.0) == "-3");
    CHECK(Dataset::format_number(0.1) == "0.1");
    CHECK(Dataset::format_number(std::numeric_limits<double>::quiet_NaN()) ==
          "nan");
    CHECK(Dataset::format_number(std::numeric_limits<double>::infinity()) ==
          "inf");
    CHECK(Dataset::format_number(-std::numeric_limits<double>::infinity()) ==
          "-inf");
    CHECK(Dataset::format_number(1.0 / 3.0) == "0.333333333333");

    // 12 significant digits round-trip the values used in the datasets
    for (double v : {4.52, 5.1987654321, -0.000123456789, 1e-9, 123456.789}) {
        const std::string s = Dataset::format_number(v);
        CHECK(std::abs(std::stod(s) - v) <= 1e-12 * std::abs(v));
    }
}

TEST_CASE("dataset shape rules") {
    CHECK_THROWS_AS(Dataset(std::vector<std::string>{}), std::invalid_argument);

    Dataset d({"a", "b"});
    CHECK(d.cols() == 2);
    CHECK(d.rows() == 0);
    CHECK(d.column_name(0) == "a");
    CHECK(d.column_name(1) == "b");
    CHECK_THROWS_AS(d.column_name(2), std::invalid_argument);

    CHECK_THROWS_AS(d.append_row({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(d.append_row({1.0, 2.0, 3.0}), std::invalid_argument);
    d.append_row({1.0, 2.5});
    CHECK(d.rows() == 1);
    CHECK(d.cell(0, 1) == 2.5);
    CHECK_THROWS_AS(d.cell(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(d.cell(0, 2), std::invalid_argument);
}

TEST_CASE("text cells render as text but keep their number") {
    Dataset d({"a", "b"});
    d.append_row({0.0, 2.5});
    CHECK(!d.is_text(0, 0));
    d.set_text(0, 0, "x");
    CHECK(d.is_text(0, 0));
    CHECK(!d.is_text(0, 1));
    CHECK(d.cell_string(0, 0) == "x");
    CHECK(d.cell_string(0, 1) == "2.5");
    CHECK(d.to_string() == "a,b\nx,2.5\n");
}

TEST_CASE("csv writing round-trips to_string") {
    Dataset d({"omega", "label", "value"});
    d.append_row({4.52, 0.0, 1.0 / 3.0});
    d.set_text(0, 1, "0100");
    d.append_row({5.0, 1.0, std::numeric_limits<double>::quiet_NaN()});

    const std::string path = "test_csv_roundtrip.csv";
    d.write_csv(path);
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == d.to_string());
    CHECK(buf.str() ==
          "omega,label,value\n4.52,0100,0.333333333333\n5,1,nan\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(d.write_csv("/nonexistent/dir/f.csv"), io_error);
}

TEST_CASE("identical content renders byte-identically") {
    auto build = [] {
        Dataset d({"x", "y"});
        for (int i = 0; i < 50; ++i)
            d.append_row({0.1 * i, std::sin(0.1 * i)});
        return d.to_string();
    };
    CHECK(build() == build());
}
