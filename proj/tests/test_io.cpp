#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "resland/errors.hpp"
#include "resland/io.hpp"
#include "support/oracles.hpp"

using namespace resland;

TEST_CASE("complex literals") {
    CHECK(parse_complex("1+2i") == Complex(1, 2));
    CHECK(parse_complex("1-2i") == Complex(1, -2));
    CHECK(parse_complex("-3.5") == Complex(-3.5, 0));
    CHECK(parse_complex("2i") == Complex(0, 2));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("0+0i") == Complex(0, 0));
    CHECK(parse_complex("1e-3-2.5e+2i") == Complex(1e-3, -250));
    CHECK_THROWS_AS(parse_complex(""), ParseError);
    CHECK_THROWS_AS(parse_complex("1 + 2i"), ParseError);
    CHECK_THROWS_AS(parse_complex("abc"), ParseError);
    CHECK_THROWS_AS(parse_complex("1+2j"), ParseError);
}

TEST_CASE("complex literals round trip") {
    oracle::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const Complex z = rng.cnormal() * std::pow(10.0, rng.uniform(-8, 8));
        CHECK(parse_complex(format_complex(z)) == z);
    }
}

TEST_CASE("lists") {
    const auto r = parse_real_list("1e-2,1e-3,0.5");
    REQUIRE(r.size() == 3);
    CHECK(r[2] == 0.5);
    const auto c = parse_complex_list("1e6,1+2i");
    REQUIRE(c.size() == 2);
    CHECK(c[1] == Complex(1, 2));
    CHECK_THROWS_AS(parse_real_list("1,,2"), ParseError);
}

TEST_CASE("matrix JSON round trip is bit exact") {
    oracle::Rng rng(8);
    for (int t = 0; t < 50; ++t) {
        const ComplexMatrix a(rng.matrix(rng.integer(1, 6)));
        const ComplexMatrix b = parse_matrix_json(matrix_to_json(a));
        CHECK(b.n() == a.n());
        CHECK(b.row_major() == a.row_major());
    }
}

TEST_CASE("matrix JSON errors") {
    CHECK_THROWS_AS(parse_matrix_json("{"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("[]"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 2, "entries": [[1,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 1, "entries": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 0, "entries": []})"), ParseError);
    const ComplexMatrix ok = parse_matrix_json(R"({"n": 1, "entries": [[2, -1]]})");
    CHECK(ok(0, 0) == Complex(2, -1));
}

TEST_CASE("matrix files") {
    const auto dir = std::filesystem::temp_directory_path() / "resland_io_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "m.json";
    oracle::Rng rng(1);
    const ComplexMatrix a(rng.matrix(3));
    write_matrix_file(file, a);
    CHECK(read_matrix_file(file).row_major() == a.row_major());
    CHECK_THROWS_AS(read_matrix_file(dir / "missing.json"), IoError);
    std::filesystem::remove_all(dir);
}
