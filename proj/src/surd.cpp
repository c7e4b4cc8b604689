#include "fiblucas/surd.hpp"

#include <cmath>
#include <sstream>

namespace fiblucas {

Surd::Surd(Rational p, Rational q, Rational d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_ < 0) throw std::domain_error("Surd: negative radicand (complex values unsupported)");
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
        return;
    }
    Rational root;
    if (is_rational_square(d_, root)) {
        p_ += q_ * root;
        q_ = 0;
        d_ = 0;
    }
}

namespace {
// Shared radicand for an arithmetic combination; rationals adapt to anything.
const Rational& common_radicand(const Surd& a, const Surd& b) {
    if (a.is_rational()) return b.radicand();
    if (b.is_rational()) return a.radicand();
    if (a.radicand() != b.radicand())
        throw std::domain_error("Surd: mixing different radicands sqrt(" + to_string(a.radicand()) +
                                ") and sqrt(" + to_string(b.radicand()) + ")");
    return a.radicand();
}
} // namespace

Surd Surd::operator+(const Surd& o) const {
    const Rational& d = common_radicand(*this, o);
    return Surd(p_ + o.p_, q_ + o.q_, d);
}

Surd Surd::operator*(const Surd& o) const {
    const Rational& d = common_radicand(*this, o);
    return Surd(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d);
}

Surd Surd::operator/(const Surd& o) const {
    Rational n = o.norm();
    if (n == 0) {
        if (o.is_zero()) throw std::domain_error("Surd: division by zero");
        // p^2 = q^2 d with q != 0 forces d to be a rational square,
        // which the constructor folds away.
        throw std::domain_error("Surd: zero norm divisor");
    }
    return *this * o.conj() * Surd::from_rational(Rational(1) / n);
}

Surd Surd::pow(unsigned long k) const {
    Surd acc = Surd::from_rational(Rational(1));
    Surd base = *this;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

int Surd::sign() const {
    if (q_ == 0) return sign_of(p_);
    if (p_ == 0) return sign_of(q_);
    int sp = sign_of(p_), sq = sign_of(q_);
    if (sp == sq) return sp;
    // |p| vs |q|sqrt(d); equality would make d a rational square.
    Rational lhs = p_ * p_, rhs = q_ * q_ * d_;
    if (lhs == rhs) throw std::logic_error("Surd: non-canonical square radicand");
    return lhs > rhs ? sp : sq;
}

bool Surd::operator==(const Surd& o) const {
    if (p_ != o.p_) return false;
    if (q_ == 0 && o.q_ == 0) return true;
    if (q_ == 0 || o.q_ == 0) return false;
    // q*sqrt(d) == q'*sqrt(d') iff signs agree and q^2 d == q'^2 d'
    return sign_of(q_) == sign_of(o.q_) && q_ * q_ * d_ == o.q_ * o.q_ * o.d_;
}

Surd Surd::canonicalized() const {
    if (q_ == 0) return *this;
    // sqrt(n/m) = sqrt(n m)/m; pull the square part out front
    Integer f;
    Integer s = square_free_part(numerator(d_) * denominator(d_), f);
    return Surd(p_, q_ * Rational(f, denominator(d_)), Rational(s));
}

double Surd::to_double() const {
    return fiblucas::to_double(p_) + fiblucas::to_double(q_) * std::sqrt(fiblucas::to_double(d_));
}

std::string Surd::str() const {
    if (q_ == 0) return to_string(p_);
    std::ostringstream os;
    bool have_p = (p_ != 0);
    if (have_p) os << to_string(p_);
    Rational q = q_;
    if (have_p) {
        os << (q < 0 ? " - " : " + ");
        if (q < 0) q = -q;
    } else if (q < 0) {
        os << "-";
        q = -q;
    }
    if (q != 1) os << to_string(q) << "*";
    os << "sqrt(" << to_string(d_) << ")";
    return os.str();
}

} // namespace fiblucas
