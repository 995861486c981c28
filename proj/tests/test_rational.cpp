#include <doctest.h>

#include <random>

#include "ist/error.hpp"
#include "ist/rational.hpp"

using ist::Rational;

TEST_CASE("rational values are stored reduced with a positive denominator") {
    const Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-1, 3) < Rational(-1, 4));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-1, 4).frac() == Rational(3, 4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow is reported, not wrapped") {
    const Rational big(INT64_MAX / 2 + 1);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
    CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("3/5") == Rational(3, 5));
    CHECK(Rational::parse(" -7/10 ") == Rational(-7, 10));
    CHECK(Rational::parse("+4") == Rational(4));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).fraction_str() == "5/1");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ist::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ist::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ist::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ist::ParseError);
}

TEST_CASE("exact square roots") {
    CHECK(ist::exact_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK(ist::exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(ist::exact_sqrt(Rational(1, 2)).has_value());
    CHECK_FALSE(ist::exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("field identities hold on random small rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 5000; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(((a < b) == (a.to_double() < b.to_double()) || a.to_double() == b.to_double()));
        CHECK(Rational::parse(a.fraction_str()) == a);
    }
}
