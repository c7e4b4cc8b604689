#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/verify.hpp"

#include <doctest.h>

using namespace fiblucas;

TEST_CASE("terminating 2F1 basics") {
    // 2F1(-1, -2; -3; 1) = 1 + (-1)(-2)/(-3) = 1/3
    CHECK(eval_2f1_terminating({1, Rational(-2), Rational(-3), Rational(1)}) == Rational(1, 3));
    // m = 0 is the empty product
    CHECK(eval_2f1_terminating({0, Rational(5, 7), Rational(-3), Rational(9)}) == 1);
    // a2 = 0 kills every r >= 1
    CHECK(eval_2f1_terminating({4, Rational(0), Rational(3), Rational(2)}) == 1);
    CHECK_THROWS_AS(eval_2f1_terminating({-1, Rational(1), Rational(1), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("numerator-first evaluation avoids spurious poles") {
    // b1 = -i is a negative integer but the numerator terminates first
    CHECK(eval_2f1_terminating({1, Rational(-2), Rational(-3), Rational(1)}) == Rational(1, 3));
    // genuine pole: (b1)_r hits zero at r = 2 while the numerator is alive
    try {
        eval_2f1_terminating({2, Rational(5), Rational(-1), Rational(1)});
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.r == 2);
    }
}

TEST_CASE("Chu-Vandermonde closed form") {
    CHECK(chu_vandermonde(1, 3) == Rational(1, 3));
    CHECK(chu_vandermonde(0, 9) == 1);
    CHECK(chu_vandermonde(2, 5) == Rational(1, 10));
    CHECK_THROWS_AS(chu_vandermonde(3, 5), std::invalid_argument);
    for (long i = 0; i <= 30; ++i)
        for (long m = 0; 2 * m <= i; ++m)
            CHECK(eval_2f1_terminating({m, Rational(m - i), Rational(-i), Rational(1)}) ==
                  chu_vandermonde(m, i));
}

TEST_CASE("unit-argument psi connection values") {
    CHECK(eval_2f1_at_unity_psi(0, 5) == 1);
    CHECK(eval_2f1_at_unity_psi(1, 5) == Rational(1, 5));
    CHECK(eval_2f1_at_unity_psi(2, 6) == 0);
    CHECK_THROWS_AS(eval_2f1_at_unity_psi(4, 6), std::invalid_argument);
    for (long i = 1; i <= 30; ++i)
        for (long m = 0; 2 * m <= i; ++m)
            CHECK(eval_2f1_terminating({m, Rational(i - m), Rational(i - 2 * m + 2), Rational(1)}) ==
                  eval_2f1_at_unity_psi(m, i));
}

TEST_CASE("coefficient recurrence with boundary zeros") {
    CHECK(psi_in_phi_coefficient(-1, 5, Rational(1), Rational(1), Rational(1), Rational(1)) == 0);
    CHECK(psi_in_phi_coefficient(4, 6, Rational(1), Rational(1), Rational(1), Rational(1)) == 0);
    Rng rng(2024);
    for (int t = 0; t < 10; ++t) {
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        Rational r = rng.rational(9, 4), s = rng.rational(9, 4);
        for (long i = 2; i <= 20; ++i)
            for (long m = 1; 2 * m <= i - 1; ++m) {
                Rational lhs = r * psi_in_phi_coefficient(m, i - 1, a, b, r, s) -
                               r * b * psi_in_phi_coefficient(m - 1, i - 1, a, b, r, s) +
                               a * s * psi_in_phi_coefficient(m - 1, i - 2, a, b, r, s);
                CHECK(lhs == a * psi_in_phi_coefficient(m, i, a, b, r, s));
            }
    }
}
