#include "fiblucas/connect.hpp"

#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/seq.hpp"

#include <cmath>

namespace fiblucas {

namespace {

void check_all_nonzero(const Rational& a, const Rational& b, const Rational& r,
                       const Rational& s) {
    if (a == 0 || b == 0 || r == 0 || s == 0)
        throw std::invalid_argument("connection parameters must be nonzero");
}

void check_degree(long i) {
    if (i < 0) throw std::invalid_argument("degree must be nonnegative");
}

} // namespace

Expansion connect_phi_to_psi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i) {
    check_all_nonzero(a, b, r, s);
    check_degree(i);
    Expansion e{FamilyParams(Kind::Phi, a, b), FamilyParams(Kind::Psi, r, s), i, {}};
    Rational lead = rat_pow(a / r, i);
    Rational z = b * r * r / (a * a * s);
    for (long m = 0; m <= i / 2; ++m)
        e.terms.push_back({m, lead * c_coeff(i - 2 * m) * rat_pow(-s, m) *
                                  Rational(binomial(i, m)) *
                                  eval_2f1_terminating({m, Rational(m - i), Rational(-i), z})});
    return e;
}

Expansion connect_psi_to_phi(const Rational& r, const Rational& s, const Rational& a,
                             const Rational& b, long i) {
    check_all_nonzero(a, b, r, s);
    check_degree(i);
    Expansion e{FamilyParams(Kind::Psi, r, s), FamilyParams(Kind::Phi, a, b), i, {}};
    if (i == 0) {
        e.terms.push_back({0, Rational(2)}); // psi_0 = 2 phi_0
        return e;
    }
    for (long m = 0; m <= i / 2; ++m)
        e.terms.push_back({m, psi_in_phi_coefficient(m, i, a, b, r, s)});
    return e;
}

Expansion connect_phi_to_phi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i) {
    check_all_nonzero(a, b, r, s);
    check_degree(i);
    Expansion e{FamilyParams(Kind::Phi, a, b), FamilyParams(Kind::Phi, r, s), i, {}};
    Rational lead = rat_pow(a / r, i);
    Rational z = b * r * r / (a * a * s);
    for (long m = 0; m <= i / 2; ++m)
        e.terms.push_back(
            {m, lead * rat_pow(-s, m) * Rational(binomial(i, m)) *
                    Rational(i - 2 * m + 1, i - m + 1) *
                    eval_2f1_terminating({m, Rational(m - i - 1), Rational(-i), z})});
    return e;
}

Expansion connect_psi_to_psi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i) {
    check_all_nonzero(a, b, r, s);
    check_degree(i);
    Expansion e{FamilyParams(Kind::Psi, a, b), FamilyParams(Kind::Psi, r, s), i, {}};
    if (i == 0) {
        e.terms.push_back({0, Rational(1)}); // both psi_0 are the constant 2
        return e;
    }
    Rational lead = rat_pow(a / r, i);
    Rational z = b * r * r / (a * a * s);
    for (long m = 0; m <= i / 2; ++m)
        e.terms.push_back({m, lead * c_coeff(i - 2 * m) * rat_pow(-s, m) *
                                  Rational(binomial(i, m)) *
                                  eval_2f1_terminating({m, Rational(m - i), Rational(1 - i), z})});
    return e;
}

Poly expand_expansion(const Expansion& e) {
    Poly acc;
    for (const auto& term : e.terms) {
        if (term.coeff == 0) continue;
        acc += gen_poly(e.target, e.degree - 2 * term.m).scaled(term.coeff);
    }
    return acc;
}

ExpansionCheck verify_expansion_against(const Expansion& e, const Poly& expected) {
    Poly got = expand_expansion(e);
    Poly diff = got - expected;
    return {diff.is_zero(), std::move(diff)};
}

ExpansionCheck verify_expansion(const Expansion& e) {
    Poly expected = e.source ? gen_poly(*e.source, e.degree)
                             : Poly::monomial(static_cast<int>(e.degree), Rational(1));
    return verify_expansion_against(e, expected);
}

double trig_identity_check(long i, std::span<const double> thetas) {
    check_degree(i);
    double worst = 0.0;
    for (double theta : thetas) {
        double acc = 0.0;
        for (long m = 0; m <= i / 2; ++m)
            acc += to_double(c_coeff(i - 2 * m)) * std::cos(static_cast<double>(i - 2 * m) * theta);
        double residual = std::fabs(2.0 * std::sin(theta) * acc -
                                    std::sin(static_cast<double>(i + 1) * theta));
        worst = std::max(worst, residual);
    }
    return worst;
}

} // namespace fiblucas
