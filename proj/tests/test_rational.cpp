#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "bubblegrid/errors.hpp"
#include "bubblegrid/rational.hpp"

using bubblegrid::Rational;

TEST_CASE("rational arithmetic reduces") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
}

TEST_CASE("rational ordering and rounding") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(6, 3).floor() == 2);
}

TEST_CASE("rational text") {
    CHECK(Rational(-23, 2).to_string() == "-23/2");
    CHECK(Rational(14).to_string() == "14");
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("1/0"), bubblegrid::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), bubblegrid::ParseError);
    CHECK_THROWS_AS(Rational(1, 0), bubblegrid::DomainError);
}

TEST_CASE("rational overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}
