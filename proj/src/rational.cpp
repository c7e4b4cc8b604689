#include "fiblucas/rational.hpp"

#include <cmath>
#include <cctype>

namespace fiblucas {

bool integer_kth_root(const Integer& n, unsigned k, Integer& root) {
    if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
    if (k == 1) { root = n; return true; }
    if (n < 0) {
        if (k % 2 == 0) return false;
        Integer r;
        if (!integer_kth_root(-n, k, r)) return false;
        root = -r;
        return true;
    }
    if (n == 0 || n == 1) { root = n; return true; }
    // Binary search on [1, 2^(ceil(bits/k))]; exact, no float estimate.
    unsigned bits = msb(n) + 1;
    Integer lo = 1, hi = Integer(1) << (bits / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (int_pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    root = lo;
    return int_pow(lo, k) == n;
}

bool rational_kth_root(const Rational& r, unsigned k, Rational& root) {
    Integer rn, rd;
    if (!integer_kth_root(numerator(r), k, rn)) return false;
    if (!integer_kth_root(denominator(r), k, rd)) return false;
    root = Rational(rn, rd);
    return true;
}

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        return std::string(s);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) fail();
        return Rational(Integer(strip_plus(text)));
    }
    auto nums = text.substr(0, slash);
    auto dens = text.substr(slash + 1);
    if (!is_int(nums) || !is_int(dens)) fail();
    Integer n{strip_plus(nums)};
    Integer d{strip_plus(dens)};
    if (d == 0) throw std::invalid_argument("not a rational: zero denominator");
    return make_rational(std::move(n), std::move(d));
}

Integer square_free_part(Integer n, Integer& square_factor) {
    if (n <= 0) throw std::invalid_argument("square_free_part: need n > 0");
    square_factor = 1;
    Integer s = 1;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e / 2 > 0) square_factor *= int_pow(p, e / 2);
        if (e % 2) s *= p;
    };
    strip(2);
    for (Integer t = 3; t * t <= n && t < 1000000; t += 2) strip(t);
    if (n > 1) {
        Integer r;
        if (is_perfect_square(n, r))
            square_factor *= r;
        else
            s *= n;
    }
    return s;
}

} // namespace fiblucas

