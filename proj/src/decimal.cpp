#include "fiblucas/decimal.hpp"

namespace fiblucas {

namespace {

Integer floordiv(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

std::string render(Integer scaled, unsigned digits) {
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    Integer pow10 = int_pow(Integer(10), digits);
    Integer ip = scaled / pow10, fp = scaled % pow10;
    std::string out = neg && (ip != 0 || fp != 0) ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string f = fp.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

// round-half-away-from-zero of n/d, d > 0
Integer round_rational(const Integer& n, const Integer& d) {
    Integer two_n = 2 * n;
    return n >= 0 ? floordiv(two_n + d, 2 * d) : -floordiv(-two_n + d, 2 * d);
}

} // namespace

std::string decimal_string(const Rational& value, unsigned digits) {
    Rational scaled = value * Rational(int_pow(Integer(10), digits));
    return render(round_rational(numerator(scaled), denominator(scaled)), digits);
}

std::string decimal_string(const Surd& value, unsigned digits) {
    if (value.is_rational()) return decimal_string(value.rational_part(), digits);

    // value = p + q*sqrt(d), sqrt(d) irrational. At guard precision G,
    // value*10^G = (A + sgn*sqrt(M))/L with integers A, M, L; its floor is
    // computable exactly from the integer square root of M. The final
    // rounding compares the kept remainder against half a guard unit; an
    // exact tie is impossible for an irrational value, so widening the
    // guard eventually resolves the two ambiguous remainders.
    for (unsigned guard = 8;; guard *= 2) {
        unsigned scale_digits = digits + guard;
        Rational pscale = value.rational_part() * Rational(int_pow(Integer(10), scale_digits));
        Rational q10 = value.surd_part() * Rational(int_pow(Integer(10), scale_digits));
        Rational m_rat = q10 * q10 * value.radicand(); // (q*10^G)^2 d > 0
        int sgn = sign_of(value.surd_part());

        Integer L = lcm(denominator(pscale), denominator(m_rat));
        Integer A = numerator(pscale) * (L / denominator(pscale));
        Integer M = numerator(m_rat) * (L / denominator(m_rat)) * L;

        Integer s = isqrt_floor(M);
        Integer root_bound = s; // floor(sqrt(M)) for +, ceil for -
        if (sgn < 0 && s * s != M) root_bound = s + 1;
        Integer F = floordiv(A + sgn * root_bound, L); // floor(value * 10^G)

        Integer H = int_pow(Integer(10), guard);
        Integer m = floordiv(F, H);
        Integer rem = F - m * H;
        Integer half = H / 2;
        if (rem == half || rem == half - 1) continue; // too close to call at this guard
        return render(rem > half ? m + 1 : m, digits);
    }
}

} // namespace fiblucas
