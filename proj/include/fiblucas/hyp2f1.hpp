#pragma once

// Exact evaluation of terminating Gauss hypergeometric sums
// 2F1(-m, a2; b1; z) with rational a2, b1, z. Terms are summed with the
// numerator Pochhammer products checked before the denominator, so the
// sum is well defined whenever every term actually reached is finite.

#include "fiblucas/rational.hpp"

namespace fiblucas {

struct Hyp2F1Spec {
    long m = 0;  // numerator parameter -m, termination order
    Rational a2;
    Rational b1;
    Rational z;
};

class PoleError : public std::domain_error {
public:
    explicit PoleError(long r)
        : std::domain_error("2F1: denominator Pochhammer (b1)_r vanishes at r = " +
                            std::to_string(r)),
          r(r) {}
    long r;
};

// sum_{r=0}^{m} (-m)_r (a2)_r / (b1)_r z^r / r!
Rational eval_2f1_terminating(const Hyp2F1Spec& spec);

// 2F1(-m, m-i; -i; 1) = 1 / C(i,m) for 0 <= m <= i/2 (Chu-Vandermonde)
Rational chu_vandermonde(long m, long i);

// 2F1(-m, i-m; i-2m+2; 1) = 1 (m=0), 1/i (m=1), 0 (m>=2), for 0 <= m <= i/2
Rational eval_2f1_at_unity_psi(long m, long i);

// A_{m,i} = i s^m (r/a)^{i-2m} C(i-m,m)/(i-m) 2F1(-m, i-m; i-2m+2; b r^2/(a^2 s)),
// zero whenever m < 0 or m > i/2. Satisfies
// r A_{m,i-1} - r b A_{m-1,i-1} + a s A_{m-1,i-2} = a A_{m,i}.
Rational psi_in_phi_coefficient(long m, long i, const Rational& a, const Rational& b,
                            const Rational& r, const Rational& s);

} // namespace fiblucas
