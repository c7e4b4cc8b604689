#pragma once

// Construction of the generalized Fibonacci (phi) and Lucas (psi)
// polynomials: recurrence, explicit power form, monomial inversion, and
// Binet roots in Q(sqrt(a^2 x^2 + 4b)).

#include "fiblucas/expansion.hpp"
#include "fiblucas/poly.hpp"
#include "fiblucas/surd.hpp"

#include <atomic>
#include <deque>
#include <mutex>

namespace fiblucas {

// phi_j = a x phi_{j-1} + b phi_{j-2}, phi_0 = 1, phi_1 = a x
Poly gen_phi(const Rational& a, const Rational& b, long j);
// psi_j = r x psi_{j-1} + s psi_{j-2}, psi_0 = 2, psi_1 = r x
Poly gen_psi(const Rational& r, const Rational& s, long j);
// dispatch on kind; the display scale is not applied
Poly gen_poly(const FamilyParams& fam, long j);

// sum_{m<=j/2} C(j-m,m) b^m a^{j-2m} x^{j-2m}
Poly phi_power_form(const Rational& a, const Rational& b, long j);
// j * sum_{m<=j/2} s^m r^{j-2m} C(j-m,m)/(j-m) x^{j-2m}  (j=0 gives 2)
Poly psi_power_form(const Rational& r, const Rational& s, long j);

// x^j = a^{-j} sum_i (-b)^i C(j,i) (j-2i+1)/(j-i+1) phi_{j-2i}
Expansion invert_phi(const Rational& a, const Rational& b, long j);
// x^j = r^{-j} sum_i (-s)^i c_{j-2i} C(j,i) psi_{j-2i}
Expansion invert_psi(const Rational& r, const Rational& s, long j);

// alpha, beta = (a x +- sqrt(a^2 x^2 + 4 b)) / 2; requires a^2 x^2 + 4b >= 0
std::pair<Surd, Surd> binet_alpha_beta(const Rational& a, const Rational& b, const Rational& x);
std::pair<Surd, Surd> binet_alpha_beta(const FamilyParams& fam, const Rational& x);

// Memoizing generator for one family. Lazily extends under a writer lock;
// published entries are immutable, so concurrent readers need no lock.
class SeqCache {
public:
    explicit SeqCache(FamilyParams params);
    const FamilyParams& params() const { return params_; }
    const Poly& at(long j);

private:
    FamilyParams params_;
    std::deque<Poly> polys_;
    std::atomic<size_t> ready_;
    std::mutex grow_;
};

} // namespace fiblucas
