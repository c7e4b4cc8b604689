#pragma once

// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// values in lowest terms with a positive denominator, so the canonical
// form (zero = 0/1, den > 0) holds by construction.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiblucas {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline int sign_of(const Integer& n) { return n.sign(); }
inline int sign_of(const Rational& r) { return numerator(r).sign(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Integer int_pow(Integer base, unsigned long e) {
    Integer acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Rational from a possibly-negative denominator (boost requires den > 0).
inline Rational make_rational(Integer n, Integer d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(std::move(n), std::move(d));
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e >= 0)
        return Rational(int_pow(numerator(base), static_cast<unsigned long>(e)),
                        int_pow(denominator(base), static_cast<unsigned long>(e)));
    if (base == 0) throw std::domain_error("rat_pow: 0 raised to a negative power");
    return make_rational(int_pow(denominator(base), static_cast<unsigned long>(-e)),
                         int_pow(numerator(base), static_cast<unsigned long>(-e)));
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer acc(1);
    for (long t = 1; t <= k; ++t) {
        acc *= (n - k + t);
        acc /= t; // exact at every step
    }
    return acc;
}

inline Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    return sqrt(n);
}

inline bool is_perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

// True iff r = (root)^2 for a rational root >= 0.
inline bool is_rational_square(const Rational& r, Rational& root) {
    if (r < 0) return false;
    Integer sn, sd;
    if (!is_perfect_square(numerator(r), sn)) return false;
    if (!is_perfect_square(denominator(r), sd)) return false;
    root = Rational(sn, sd);
    return true;
}

// Exact k-th root when it exists: n = root^k. Handles negative n for odd k.
bool integer_kth_root(const Integer& n, unsigned k, Integer& root);
bool rational_kth_root(const Rational& r, unsigned k, Rational& root);

// n > 0 as s * f^2 with s squarefree (trial division up to 10^6 plus a
// final perfect-square test; a residual with a larger square factor is
// left in s -- exact, just not minimal).
Integer square_free_part(Integer n, Integer& square_factor);

// Canonical text form "n/d" ("/1" omitted).
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts an optionally signed integer literal or "p/q".
Rational parse_rational(std::string_view text);

} // namespace fiblucas
