#include "fiblucas/connect.hpp"
#include "fiblucas/seq.hpp"
#include "fiblucas/verify.hpp"

#include <doctest.h>

#include <thread>

using namespace fiblucas;

namespace {

Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }

} // namespace

TEST_CASE("recurrence generation") {
    CHECK(gen_phi(Rational(1), Rational(1), 2) == P({1, 0, 1}));   // F_3
    CHECK(gen_phi(Rational(2), Rational(-1), 2) == P({-1, 0, 4})); // U_2
    CHECK(gen_phi(Rational(3), Rational(-2), 2) == P({-2, 0, 9})); // Fermat
    CHECK(gen_psi(Rational(1), Rational(1), 2) == P({2, 0, 1}));   // L_2
    CHECK(gen_psi(Rational(3), Rational(-2), 3) == P({0, -18, 0, 27}));
    // 2 T_4 = 16x^4 - 16x^2 + 2
    CHECK(gen_psi(Rational(2), Rational(-1), 4) == P({2, 0, -16, 0, 16}));
    CHECK(gen_phi(Rational(1), Rational(1), 0) == Poly::one());
    CHECK(gen_psi(Rational(1), Rational(1), 0) == P({2}));
    CHECK_THROWS_AS(gen_phi(Rational(0), Rational(1), 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_psi(Rational(1), Rational(0), 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_phi(Rational(1), Rational(1), -1), std::invalid_argument);
}

TEST_CASE("classical index shift: phi(1,1) = F_{j+1}, psi(1,1) = L_j") {
    CHECK(gen_phi(Rational(1), Rational(1), 4) == P({1, 0, 3, 0, 1}));  // F_5
    CHECK(gen_phi(Rational(2), Rational(1), 3) == P({0, 4, 0, 8}));     // P_4
    CHECK(gen_psi(Rational(1), Rational(1), 4) == P({2, 0, 4, 0, 1}));  // L_4
    CHECK(gen_psi(Rational(1), Rational(1), 3) == P({0, 3, 0, 1}));     // L_3
}

TEST_CASE("power forms match recurrences") {
    CHECK(phi_power_form(Rational(1), Rational(1), 4) == P({1, 0, 3, 0, 1}));
    CHECK(phi_power_form(Rational(1), Rational(1), 0) == Poly::one());
    CHECK(phi_power_form(Rational(2), Rational(1), 3) == P({0, 4, 0, 8}));
    CHECK(psi_power_form(Rational(1), Rational(1), 4) == P({2, 0, 4, 0, 1}));
    CHECK(psi_power_form(Rational(5, 3), Rational(-7), 1) == P({0, Rational(5, 3)}));
    CHECK(psi_power_form(Rational(2), Rational(-1), 2) == P({-2, 0, 4}));

    Rng rng(17);
    for (int t = 0; t < 8; ++t) {
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        for (long j = 0; j <= 16; ++j) {
            CHECK(phi_power_form(a, b, j) == gen_phi(a, b, j));
            CHECK(psi_power_form(a, b, j) == gen_psi(a, b, j));
        }
    }
}

TEST_CASE("inversion round-trips") {
    // x^2 = phi_2 - phi_0 for (1,1)
    Expansion e = invert_phi(Rational(1), Rational(1), 2);
    REQUIRE(e.terms.size() == 2);
    CHECK(e.terms[0].coeff == 1);
    CHECK(e.terms[1].coeff == -1);
    CHECK(verify_expansion(e).equal);

    // x^0 = phi_0 and x^0 = (1/2) psi_0
    CHECK(invert_phi(Rational(3), Rational(5), 0).terms[0].coeff == 1);
    CHECK(invert_psi(Rational(3), Rational(5), 0).terms[0].coeff == Rational(1, 2));

    // x^3 = (1/8)(U_3 + 2 U_1)
    Expansion e3 = invert_phi(Rational(2), Rational(-1), 3);
    CHECK(e3.terms[0].coeff == Rational(1, 8));
    CHECK(e3.terms[1].coeff == Rational(2, 8));
    CHECK(verify_expansion(e3).equal);

    // x^4 against psi(2,-1): the classical (T_4 + 4 T_2 + 3 T_0)/8 with T = psi/2
    Expansion e4 = invert_psi(Rational(2), Rational(-1), 4);
    CHECK(e4.terms[0].coeff == Rational(1, 16));
    CHECK(e4.terms[1].coeff == Rational(4, 16));
    CHECK(e4.terms[2].coeff == Rational(3, 16));
    CHECK(verify_expansion(e4).equal);

    Rng rng(23);
    for (int t = 0; t < 6; ++t) {
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        for (long j = 0; j <= 14; ++j) {
            CHECK(verify_expansion(invert_phi(a, b, j)).equal);
            CHECK(verify_expansion(invert_psi(a, b, j)).equal);
        }
    }
}

TEST_CASE("Binet roots") {
    auto [alpha, beta] = binet_alpha_beta(Rational(1), Rational(1), Rational(1));
    CHECK(alpha == Surd(Rational(1, 2), Rational(1, 2), Rational(5))); // golden ratio
    CHECK(beta == Surd(Rational(1, 2), Rational(-1, 2), Rational(5)));

    // alpha^3 + beta^3 at (1,1,2) is L_3(2) = 14
    auto [a2, b2] = binet_alpha_beta(Rational(1), Rational(1), Rational(2));
    CHECK(a2.pow(3) + b2.pow(3) == Surd::from_rational(Rational(14)));

    CHECK_THROWS_AS(binet_alpha_beta(Rational(1), Rational(-1), Rational(1)), std::domain_error);

    Rng rng(5);
    for (int t = 0; t < 25; ++t) {
        Rational a = rng.rational(6, 3), b = rng.rational(6, 3), x = rng.rational(6, 3);
        if (a * a * x * x + 4 * b < 0) continue;
        auto [al, be] = binet_alpha_beta(a, b, x);
        CHECK(al * be == Surd::from_rational(-b));
        CHECK(al + be == Surd::from_rational(a * x));
        // Binet consistency with the recurrences
        long j = rng.range(0, 10);
        Surd num = al.pow(static_cast<unsigned long>(j + 1)) -
                   be.pow(static_cast<unsigned long>(j + 1));
        Surd phi_val = num / (al - be);
        CHECK(phi_val == Surd::from_rational(gen_phi(a, b, j).eval(x)));
        CHECK(al.pow(static_cast<unsigned long>(j)) + be.pow(static_cast<unsigned long>(j)) ==
              Surd::from_rational(gen_psi(a, b, j).eval(x)));
    }
}

TEST_CASE("family lookup rows") {
    FamilyParams pell = family_lookup(FamilyTag::Pell);
    CHECK(pell.kind == Kind::Phi);
    CHECK(pell.a == 2);
    CHECK(pell.b == 1);

    FamilyParams fl = family_lookup(FamilyTag::FermatLucas);
    CHECK(fl.kind == Kind::Psi);
    CHECK(fl.a == 3);
    CHECK(fl.b == -2);

    FamilyParams t = family_lookup(FamilyTag::ChebyshevT);
    CHECK(t.kind == Kind::Psi);
    CHECK(t.a == 2);
    CHECK(t.b == -1);
    CHECK(t.display_scale == Rational(1, 2));
    // T_4 = psi/2 = 8x^4 - 8x^2 + 1
    CHECK(gen_poly(t, 4).scaled(t.display_scale) == P({1, 0, -8, 0, 8}));

    FamilyParams e = family_lookup(FamilyTag::DicksonE, Rational(3));
    CHECK(e.b == -3);
    CHECK(parse_family_tag("pell-lucas") == FamilyTag::PellLucas);
    CHECK_FALSE(parse_family_tag("nope").has_value());
    // a tag pins the parameters to its row
    CHECK_THROWS_AS(FamilyParams(Kind::Phi, Rational(5), Rational(5), FamilyTag::Fibonacci),
                    std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(Kind::Psi, Rational(1), Rational(1), FamilyTag::Fibonacci),
                    std::invalid_argument);
    CHECK_NOTHROW(FamilyParams(Kind::Phi, Rational(1), Rational(-7), FamilyTag::DicksonE));
}

TEST_CASE("sequence cache is consistent and shareable") {
    SeqCache cache(FamilyParams(Kind::Phi, Rational(1), Rational(1)));
    CHECK(cache.at(40) == gen_phi(Rational(1), Rational(1), 40));
    CHECK(cache.at(3) == gen_phi(Rational(1), Rational(1), 3));

    SeqCache shared(FamilyParams(Kind::Psi, Rational(2), Rational(-1)));
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&shared, &ok, w] {
            for (long j = 0; j <= 60; ++j)
                if (shared.at(j).degree() != j) ok = false;
        });
    for (auto& th : workers) th.join();
    CHECK(ok);
}
