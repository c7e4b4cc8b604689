#include "fiblucas/hyp2f1.hpp"

namespace fiblucas {

Rational eval_2f1_terminating(const Hyp2F1Spec& spec) {
    if (spec.m < 0) throw std::invalid_argument("2F1: termination order m must be nonnegative");
    Rational total(0);
    Rational num(1);   // (-m)_r (a2)_r z^r
    Rational den(1);   // (b1)_r r!
    for (long r = 0; r <= spec.m; ++r) {
        if (r > 0) {
            Rational f1 = Rational(-spec.m + (r - 1));
            Rational f2 = spec.a2 + (r - 1);
            if (f1 == 0 || f2 == 0) break; // every later term shares the zero factor
            Rational fd = spec.b1 + (r - 1);
            if (fd == 0) throw PoleError(r);
            num *= f1 * f2 * spec.z;
            den *= fd * r;
        }
        total += num / den;
    }
    return total;
}

Rational chu_vandermonde(long m, long i) {
    if (m < 0 || 2 * m > i)
        throw std::invalid_argument("chu_vandermonde: need 0 <= m <= i/2");
    return Rational(1, binomial(i, m));
}

Rational eval_2f1_at_unity_psi(long m, long i) {
    if (i < 1 || m < 0 || 2 * m > i)
        throw std::invalid_argument("eval_2f1_at_unity_psi: need i >= 1 and 0 <= m <= i/2");
    if (m == 0) return Rational(1);
    if (m == 1) return Rational(1, i);
    return Rational(0);
}

Rational psi_in_phi_coefficient(long m, long i, const Rational& a, const Rational& b,
                            const Rational& r, const Rational& s) {
    if (m < 0 || i < 1 || 2 * m > i) return Rational(0);
    Rational z = b * r * r / (a * a * s);
    Rational front = Rational(i) * rat_pow(s, m) * rat_pow(r / a, i - 2 * m) *
                     Rational(binomial(i - m, m), Integer(i - m));
    return front * eval_2f1_terminating({m, Rational(i - m), Rational(i - 2 * m + 2), z});
}

} // namespace fiblucas
