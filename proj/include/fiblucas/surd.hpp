#pragma once

// Elements p + q*sqrt(d) of Q(sqrt(d)), d >= 0 rational. Canonical form:
// if d is a perfect rational square the root is folded into p (so q = 0,
// d = 0); a pure rational always carries d = 0. Values with q = 0 combine
// with any radicand; otherwise both operands must share d.

#include "fiblucas/rational.hpp"

namespace fiblucas {

class Surd {
public:
    Surd() : p_(0), q_(0), d_(0) {}
    Surd(Rational p, Rational q, Rational d);
    static Surd from_rational(const Rational& p) { return Surd(p, Rational(0), Rational(0)); }
    // sqrt(d) for d >= 0
    static Surd sqrt_of(const Rational& d) { return Surd(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    const Rational& radicand() const { return d_; }
    bool is_rational() const { return q_ == 0; }

    Surd operator-() const { return Surd(-p_, -q_, d_); }
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const { return *this + (-o); }
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const;
    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator-=(const Surd& o) { return *this = *this - o; }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }

    Surd conj() const { return Surd(p_, -q_, d_); }
    // p^2 - q^2 d, the field norm over Q
    Rational norm() const { return p_ * p_ - q_ * q_ * d_; }
    Surd pow(unsigned long k) const;

    // exact sign of the real number p + q*sqrt(d)
    int sign() const;
    Surd abs() const { return sign() >= 0 ? *this : -*this; }

    // field-theoretic equality (1 + 2*sqrt(2) == 1 + sqrt(8))
    bool operator==(const Surd& o) const;
    bool operator!=(const Surd& o) const { return !(*this == o); }

    // same value over a squarefree integer radicand (1 + sqrt(8) -> 1 + 2*sqrt(2))
    Surd canonicalized() const;

    bool is_zero() const { return p_ == 0 && q_ == 0; }

    double to_double() const;
    // "p + q*sqrt(d)" (terms elided when zero)
    std::string str() const;

private:
    Rational p_, q_, d_;
};

inline Surd operator+(const Rational& r, const Surd& s) { return Surd::from_rational(r) + s; }
inline Surd operator*(const Rational& r, const Surd& s) { return Surd::from_rational(r) * s; }

} // namespace fiblucas
