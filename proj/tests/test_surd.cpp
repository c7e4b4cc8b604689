#include "fiblucas/decimal.hpp"
#include "fiblucas/surd.hpp"
#include "fiblucas/verify.hpp"

#include <doctest.h>

using namespace fiblucas;

TEST_CASE("surd multiplication and powering") {
    Surd s(Rational(1), Rational(1), Rational(2)); // 1 + sqrt(2)
    CHECK(s.pow(2) == Surd(Rational(3), Rational(2), Rational(2)));
    // (1 + sqrt(2))^3 = 7 + 5 sqrt(2)
    CHECK(s.pow(3) == Surd(Rational(7), Rational(5), Rational(2)));
    CHECK(s.pow(0) == Surd::from_rational(Rational(1)));
    // rational embedding
    Surd r(Rational(-3, 2), Rational(0), Rational(5));
    CHECK(r.pow(3) == Surd::from_rational(Rational(-27, 8)));
}

TEST_CASE("conjugate and norm") {
    Surd s(Rational(3), Rational(2), Rational(2));
    CHECK(s.conj() == Surd(Rational(3), Rational(-2), Rational(2)));
    CHECK(s.conj().conj() == s);
    CHECK((s * s.conj()).is_rational());
    CHECK(s.norm() == 1);
}

TEST_CASE("normalization folds square radicands") {
    // 1 + 3 sqrt(9/4) = 1 + 9/2
    Surd s(Rational(1), Rational(3), Rational(9, 4));
    CHECK(s.is_rational());
    CHECK(s.rational_part() == Rational(11, 2));
    // q = 0 drops the radicand
    CHECK(Surd(Rational(2), Rational(0), Rational(7)) == Surd::from_rational(Rational(2)));
}

TEST_CASE("field equality across radicand representations") {
    CHECK(Surd(Rational(0), Rational(1), Rational(8)) ==
          Surd(Rational(0), Rational(2), Rational(2))); // sqrt(8) = 2 sqrt(2)
    CHECK(Surd(Rational(1), Rational(1), Rational(2)) !=
          Surd(Rational(1), Rational(1), Rational(3)));
    CHECK(Surd(Rational(1), Rational(1), Rational(2)) !=
          Surd(Rational(1), Rational(-1), Rational(2)));
}

TEST_CASE("arithmetic requires a common radicand") {
    Surd a(Rational(1), Rational(1), Rational(2));
    Surd b(Rational(1), Rational(1), Rational(3));
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
    // rationals mix with anything
    CHECK(a + Surd::from_rational(Rational(1)) == Surd(Rational(2), Rational(1), Rational(2)));
    CHECK_THROWS_AS(Surd(Rational(1), Rational(1), Rational(-2)), std::domain_error);
}

TEST_CASE("division by rationalization") {
    Surd a(Rational(7), Rational(5), Rational(2));
    Surd b(Rational(1), Rational(1), Rational(2));
    CHECK(a / b == b.pow(2));
    CHECK_THROWS_AS(a / Surd::from_rational(Rational(0)), std::domain_error);
}

TEST_CASE("exact sign") {
    CHECK(Surd(Rational(0), Rational(1), Rational(2)).sign() == 1);
    CHECK(Surd(Rational(-1), Rational(1), Rational(2)).sign() == 1);  // sqrt(2) > 1
    CHECK(Surd(Rational(-2), Rational(1), Rational(2)).sign() == -1); // sqrt(2) < 2
    CHECK(Surd(Rational(2), Rational(-1), Rational(2)).sign() == 1);
    CHECK(Surd(Rational(1), Rational(-1), Rational(2)).sign() == -1);
    CHECK(Surd().sign() == 0);
}

TEST_CASE("pow additivity") {
    Rng rng(3);
    for (int t = 0; t < 40; ++t) {
        Surd s(rng.rational(9, 4), rng.rational(9, 4), Rational(rng.range(2, 30)));
        unsigned long j = static_cast<unsigned long>(rng.range(0, 6));
        unsigned long k = static_cast<unsigned long>(rng.range(0, 6));
        CHECK(s.pow(j + k) == s.pow(j) * s.pow(k));
    }
}

TEST_CASE("zero iff both components vanish (non-square d)") {
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        Rational p = rng.rational(9, 4), q = rng.rational(9, 4);
        Surd s(p, q, Rational(2));
        CHECK_FALSE(s.is_zero()); // p, q nonzero by construction
    }
    CHECK(Surd(Rational(0), Rational(0), Rational(2)).is_zero());
}

TEST_CASE("decimal rendering is correctly rounded") {
    // sqrt(2) = 1.41421356237309504880168872420969807856967187537694...
    CHECK(decimal_string(Surd::sqrt_of(Rational(2)), 30) ==
          "1.414213562373095048801688724210");
    CHECK(decimal_string(Surd::sqrt_of(Rational(2)), 5) == "1.41421");
    CHECK(decimal_string(Rational(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rational(-1, 8), 3) == "-0.125");
    CHECK(decimal_string(Rational(0), 4) == "0.0000");
    // golden ratio to 40 digits: 1.6180339887498948482045868343656381177203
    Surd golden(Rational(1, 2), Rational(1, 2), Rational(5));
    CHECK(decimal_string(golden, 40) == "1.6180339887498948482045868343656381177203");
    CHECK(decimal_string(-golden, 10) == "-1.6180339887");
}

TEST_CASE("surd text form") {
    CHECK(Surd(Rational(7), Rational(5), Rational(2)).str() == "7 + 5*sqrt(2)");
    CHECK(Surd(Rational(7), Rational(-5), Rational(2)).str() == "7 - 5*sqrt(2)");
    CHECK(Surd(Rational(0), Rational(1), Rational(2)).str() == "sqrt(2)");
    CHECK(Surd(Rational(0), Rational(-1, 2), Rational(3)).str() == "-1/2*sqrt(3)");
    CHECK(Surd::from_rational(Rational(-7, 3)).str() == "-7/3");
}
