#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cbo/rational.hpp"

using cbo::Rational;

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rational(30, 14).num() == 15);
    CHECK(Rational(30, 14).den() == 7);
    CHECK(Rational(-4, 6).num() == -2);
    CHECK(Rational(-4, 6).den() == 3);
    CHECK(Rational(3, -2).num() == -3);
    CHECK(Rational(3, -2).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(8, 6).str() == "4/3");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("equality ignores representation") {
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(3, 2) != Rational(4, 3));
}

TEST_CASE("order matches exact fraction comparison") {
    CHECK(Rational(15, 7) > Rational(2));
    CHECK(Rational(18, 9) == Rational(2));
    CHECK(Rational(4, 3) < Rational(3, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 40);
    for (int i = 0; i < 500; ++i) {
        const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const bool exact_less = static_cast<long long>(a) * d < static_cast<long long>(c) * b;
        CHECK((Rational(a, b) < Rational(c, d)) == exact_less);
    }
}
