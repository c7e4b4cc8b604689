#include "fiblucas/seq.hpp"

namespace fiblucas {

namespace {

void check_params(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("family parameters must be nonzero");
}

void check_degree(long j) {
    if (j < 0) throw std::invalid_argument("degree must be nonnegative");
}

Poly gen_by_recurrence(const Rational& a, const Rational& b, long j, const Rational& seed0) {
    check_params(a, b);
    check_degree(j);
    Poly prev2(seed0);
    if (j == 0) return prev2;
    Poly ax = Poly::monomial(1, a);
    Poly prev1 = ax; // phi_1 = a x, psi_1 = r x
    for (long n = 2; n <= j; ++n) {
        Poly next = ax * prev1 + prev2.scaled(b);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

} // namespace

Poly gen_phi(const Rational& a, const Rational& b, long j) {
    return gen_by_recurrence(a, b, j, Rational(1));
}

Poly gen_psi(const Rational& r, const Rational& s, long j) {
    return gen_by_recurrence(r, s, j, Rational(2));
}

Poly gen_poly(const FamilyParams& fam, long j) {
    return fam.kind == Kind::Phi ? gen_phi(fam.a, fam.b, j) : gen_psi(fam.a, fam.b, j);
}

Poly phi_power_form(const Rational& a, const Rational& b, long j) {
    check_params(a, b);
    check_degree(j);
    std::vector<Rational> c(static_cast<size_t>(j) + 1, Rational(0));
    for (long m = 0; m <= j / 2; ++m)
        c[static_cast<size_t>(j - 2 * m)] =
            Rational(binomial(j - m, m)) * rat_pow(b, m) * rat_pow(a, j - 2 * m);
    return Poly(std::move(c));
}

Poly psi_power_form(const Rational& r, const Rational& s, long j) {
    check_params(r, s);
    check_degree(j);
    if (j == 0) return Poly(Rational(2));
    std::vector<Rational> c(static_cast<size_t>(j) + 1, Rational(0));
    for (long m = 0; m <= j / 2; ++m)
        c[static_cast<size_t>(j - 2 * m)] = Rational(j) * rat_pow(s, m) * rat_pow(r, j - 2 * m) *
                                            Rational(binomial(j - m, m), Integer(j - m));
    return Poly(std::move(c));
}

Expansion invert_phi(const Rational& a, const Rational& b, long j) {
    check_params(a, b);
    check_degree(j);
    Expansion e{std::nullopt, FamilyParams(Kind::Phi, a, b), j, {}};
    Rational a_minus_j = rat_pow(a, -j);
    for (long i = 0; i <= j / 2; ++i)
        e.terms.push_back({i, a_minus_j * rat_pow(-b, i) * Rational(binomial(j, i)) *
                                  Rational(j - 2 * i + 1, j - i + 1)});
    return e;
}

Expansion invert_psi(const Rational& r, const Rational& s, long j) {
    check_params(r, s);
    check_degree(j);
    Expansion e{std::nullopt, FamilyParams(Kind::Psi, r, s), j, {}};
    Rational r_minus_j = rat_pow(r, -j);
    for (long i = 0; i <= j / 2; ++i)
        e.terms.push_back(
            {i, r_minus_j * rat_pow(-s, i) * c_coeff(j - 2 * i) * Rational(binomial(j, i))});
    return e;
}

std::pair<Surd, Surd> binet_alpha_beta(const Rational& a, const Rational& b, const Rational& x) {
    check_params(a, b);
    Rational d = a * a * x * x + 4 * b;
    if (d < 0)
        throw std::domain_error("binet_alpha_beta: a^2 x^2 + 4b < 0 (complex roots unsupported)");
    Rational half_ax = a * x / 2;
    return {Surd(half_ax, Rational(1, 2), d), Surd(half_ax, Rational(-1, 2), d)};
}

std::pair<Surd, Surd> binet_alpha_beta(const FamilyParams& fam, const Rational& x) {
    return binet_alpha_beta(fam.a, fam.b, x);
}

SeqCache::SeqCache(FamilyParams params) : params_(std::move(params)), ready_(0) {}

const Poly& SeqCache::at(long j) {
    check_degree(j);
    auto idx = static_cast<size_t>(j);
    if (idx < ready_.load(std::memory_order_acquire)) return polys_[idx];
    std::lock_guard<std::mutex> lock(grow_);
    if (polys_.empty()) {
        polys_.emplace_back(params_.kind == Kind::Phi ? Poly(Rational(1)) : Poly(Rational(2)));
        polys_.emplace_back(Poly::monomial(1, params_.a));
        ready_.store(polys_.size(), std::memory_order_release);
    }
    Poly ax = Poly::monomial(1, params_.a);
    while (polys_.size() <= idx) {
        size_t n = polys_.size();
        polys_.push_back(ax * polys_[n - 1] + polys_[n - 2].scaled(params_.b));
        ready_.store(polys_.size(), std::memory_order_release);
    }
    return polys_[idx];
}

} // namespace fiblucas
