#include <random>

#include "doctest.h"
#include "vvjack/errors.hpp"
#include "vvjack/kappa.hpp"
#include "vvjack/partition.hpp"
#include "vvjack/rational.hpp"

using namespace vvjack;

TEST_CASE("rational normalizes and prints") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), FormatError);
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
    CHECK_THROWS_AS(Rational::parse("x"), FormatError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
}

TEST_CASE("rational round trips on large values") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        mpz_class p1(std::to_string(rng()) + std::to_string(rng()));
        mpz_class q1(std::to_string(rng() | 1));
        mpz_class p2(std::to_string(rng()));
        mpz_class q2(std::to_string(rng() | 1));
        const Rational a(p1, q1);
        const Rational b(-p2, q2);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("make_kappa gate") {
    const auto k = make_kappa(1, 4, Partition({2, 1}));
    CHECK(k.value() == Rational(1, 4));
    CHECK(k.psd_range());

    try {
        make_kappa(-1, 2, Partition({3, 1}));
        FAIL("expected PoleExcluded");
    } catch (const PoleExcluded& e) {
        CHECK(e.witness() == "-1/2");
        CHECK(e.kappa() == "-1/2");
    }
    try {
        make_kappa(1, 1, Partition({2, 1}));
        FAIL("expected PoleExcluded");
    } catch (const PoleExcluded& e) {
        CHECK(e.witness() == "1/1");
    }
    CHECK_THROWS_AS(make_kappa(1, 0, Partition({2, 1})), InvalidArgument);
    CHECK_THROWS_AS(Partition({3}), InvalidShape);
    CHECK_THROWS_AS(Partition({1, 1, 1}), InvalidShape);
    // -2/4 reduces to the pole -1/2
    CHECK_THROWS_AS(make_kappa(-2, 4, Partition({3, 1})), PoleExcluded);
    // positive branch is open for (3,1) since l - 1 = 1 only excludes integers
    CHECK_NOTHROW(make_kappa(1, 2, Partition({3, 1})));
    CHECK_THROWS_AS(make_kappa(2, 1, Partition({3, 1})), PoleExcluded);
}

TEST_CASE("default kappa is admissible and in the positivity window for N <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& shape : admissible_shapes(n)) {
            const auto k = default_kappa(shape);
            CHECK(k.psd_range());
            CHECK(k.value() == Rational(1, shape.max_hook() + 1));
        }
    }
}
