#include "fiblucas/poly.hpp"

#include <sstream>

namespace fiblucas {

Poly Poly::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

double Poly::eval_double(double x) const {
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
    return v;
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s == 0) return Poly();
    std::vector<Rational> c(c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
}

Poly Poly::compose_scale_arg(const Rational& s) const {
    std::vector<Rational> c(c_);
    Rational p(1);
    for (auto& v : c) {
        v *= p;
        p *= s;
    }
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational v = c_[static_cast<size_t>(i)];
        if (v == 0) continue;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        bool show_coeff = (i == 0) || v != 1;
        if (show_coeff) os << to_string(v);
        if (i > 0) {
            if (show_coeff) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    Poly rem = a;
    std::vector<Rational> q;
    int db = b.degree();
    if (rem.degree() >= db) q.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational f = rem.leading() / b.leading();
        q[static_cast<size_t>(shift)] = f;
        rem -= Poly::monomial(shift, f) * b;
    }
    return {Poly(std::move(q)), rem};
}

} // namespace fiblucas
