#include <doctest.h>

#include <random>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/text_format.hpp"
#include "test_support.hpp"

using namespace bubblegrid;

TEST_CASE("parse a configuration file") {
    const auto f = parse_config("# two points\nbeta 1/2\n\n0 0 A  # left\n1 0 B\n");
    CHECK(f.beta == Beta::exact(1, 2));
    CHECK(f.config == testsupport::make({{0, 0}}, {{1, 0}}));
}

TEST_CASE("approximate beta header") {
    const auto f = parse_config("beta ~0.70710678\n0 0 A\n");
    CHECK_FALSE(f.beta.is_exact());
}

TEST_CASE("malformed files are parse errors") {
    CHECK_THROWS_AS(parse_config("0 0 A\n"), ParseError);
    CHECK_THROWS_AS(parse_config("beta 1/2\n0 0 C\n"), ParseError);
    CHECK_THROWS_AS(parse_config("beta 1/2\n0 x A\n"), ParseError);
    CHECK_THROWS_AS(parse_config("beta 1/2\n0 0 A\n0 0 B\n"), ParseError);
    CHECK_THROWS_AS(parse_config("beta 3/2\n"), ParseError);
    CHECK_THROWS_AS(parse_config(""), ParseError);
    CHECK_THROWS_AS(read_config_file("/nonexistent/file"), ParseError);
}

TEST_CASE("write then parse round-trips") {
    std::mt19937_64 rng(7);
    const auto beta = Beta::exact(2, 5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto c = testsupport::random_config(rng, 25, 6);
        const auto back = parse_config(write_config(beta, c));
        CHECK(back.config == c);
        CHECK(back.beta == beta);
    }
}
