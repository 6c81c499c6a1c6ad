#include <catch2/catch_amalgamated.hpp>

#include "madcolor/rational.hpp"

using madcolor::Rational;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    // Accumulating thirds never drifts.
    Rational sum;
    for (int i = 0; i < 300; ++i) sum += Rational(1, 3);
    CHECK(sum == Rational(100));
}

TEST_CASE("rational comparison") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(16, 7));
    CHECK(Rational(4, 3) <= Rational(4, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    // Large cross-products must not overflow.
    Rational big1(1'000'000'007LL, 998'244'353LL);
    Rational big2(1'000'000'009LL, 998'244'353LL);
    CHECK(big1 < big2);
}

TEST_CASE("rational floor, ceil, rendering") {
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational(2).str() == "2/1");
    CHECK(Rational(-4, 6).str() == "-2/3");
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational huge(std::numeric_limits<long long>::max() / 2, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}
