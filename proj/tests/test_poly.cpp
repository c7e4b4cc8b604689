#include "fiblucas/poly.hpp"
#include "fiblucas/verify.hpp"

#include <doctest.h>

using namespace fiblucas;

namespace {

Poly random_poly(Rng& rng, int max_deg) {
    std::vector<Rational> c;
    int deg = static_cast<int>(rng.range(0, max_deg));
    for (int i = 0; i <= deg; ++i)
        c.push_back(rng.range(0, 3) == 0 ? Rational(0) : rng.rational(20, 6));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("poly eval") {
    Poly p({Rational(1), Rational(0), Rational(1)}); // x^2 + 1
    CHECK(p.eval(Rational(2)) == 5);
    CHECK(Poly::zero().eval(Rational(7)) == 0);
    Poly u2({Rational(-1), Rational(0), Rational(4)}); // 4x^2 - 1
    CHECK(u2.eval(Rational(1, 2)) == 0);
}

TEST_CASE("poly normalization and degree") {
    Poly p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(Poly::zero().degree() == -1);
    CHECK(Poly(std::vector<Rational>{Rational(0)}).is_zero());
}

TEST_CASE("poly ring properties") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Poly p = random_poly(rng, 8), q = random_poly(rng, 8), r = random_poly(rng, 5);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("poly divrem") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        Poly a = random_poly(rng, 9);
        Poly b = random_poly(rng, 4);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divrem(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }
    CHECK_THROWS_AS(poly_divrem(Poly::one(), Poly::zero()), std::domain_error);
}

TEST_CASE("poly text form") {
    Poly p({Rational(-1, 2), Rational(0), Rational(3)});
    CHECK(p.str() == "3*x^2 - 1/2");
    CHECK(Poly::zero().str() == "0");
    CHECK(Poly::monomial(1, Rational(1)).str() == "x");
    CHECK(Poly({Rational(2), Rational(-1)}).str() == "-x + 2");
}

TEST_CASE("compose with cx and derivative") {
    Poly p({Rational(1), Rational(2), Rational(3)}); // 3x^2 + 2x + 1
    Poly q = p.compose_scale_arg(Rational(2));       // 12x^2 + 4x + 1
    CHECK(q.eval(Rational(1)) == 17);
    CHECK(p.derivative() == Poly({Rational(2), Rational(6)}));
}
