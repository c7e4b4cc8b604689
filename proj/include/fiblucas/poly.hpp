#pragma once

// Dense univariate polynomials over Rational. Coefficients are stored
// low degree first with no trailing zeros; the zero polynomial is the
// empty list (degree -1). All operations are exact.

#include "fiblucas/rational.hpp"

#include <vector>

namespace fiblucas {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(const Rational& constant) : c_{constant} { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly monomial(int degree, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& s) const;
    // p(c*x)
    Poly compose_scale_arg(const Rational& c) const;
    Poly derivative() const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // "c_k*x^k + ..." highest degree first; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Poly operator*(const Poly& p, const Rational& s) { return p.scaled(s); }
inline Poly operator*(const Rational& s, const Poly& p) { return p.scaled(s); }

// Quotient and remainder over the rationals; divisor must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

} // namespace fiblucas
