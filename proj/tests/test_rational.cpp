#include "doctest.h"
#include "trusslab/rational.hpp"

using namespace trusslab;

TEST_CASE("rationals are normalized with positive denominators") {
    Rational q = make_rational(6, -4);
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);

    Rational z = make_rational(0, -7);
    CHECK(numerator(z) == 0);
    CHECK(denominator(z) == 1);

    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);

    // gcd reduction at arbitrary precision.
    BigInt big = BigInt(1) << 120;
    Rational half = make_rational(big, big * 2);
    CHECK(numerator(half) == 1);
    CHECK(denominator(half) == 2);
}

TEST_CASE("arithmetic is exact") {
    CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
    CHECK(make_rational(1, 3) * 3 == 1);

    // Harmonic partial sum evaluated left-to-right and right-to-left.
    Rational left(0), right(0);
    for (int k = 1; k <= 20; ++k) left += make_rational(1, k);
    for (int k = 20; k >= 1; --k) right += make_rational(1, k);
    CHECK(left == right);
    CHECK(left == make_rational(BigInt("55835135"), BigInt("15519504")));
}

TEST_CASE("string round trips") {
    CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(parse_rational("-7/3").value() == make_rational(-7, 3));
    CHECK(parse_rational("4").value() == 4);
    CHECK(parse_rational("6/4").value() == make_rational(3, 2));
    CHECK_FALSE(parse_rational("x").ok());
    CHECK_FALSE(parse_rational("1/0").ok());
    CHECK_FALSE(parse_rational("").ok());
    CHECK_FALSE(parse_rational("1/").ok());
}
