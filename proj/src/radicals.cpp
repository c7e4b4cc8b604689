#include "fiblucas/radicals.hpp"

#include "fiblucas/seq.hpp"

#include <algorithm>
#include <sstream>

namespace fiblucas {

namespace {

void check_nonzero(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("family parameters must be nonzero");
}

Rational sign_unit(long k) { return k % 2 == 0 ? Rational(-1) : Rational(1); } // (-1)^{k+1}

} // namespace

Rational square_identity_residual(const Rational& a, const Rational& b, const Rational& x, long k) {
    check_nonzero(a, b);
    if (k < 1) throw std::invalid_argument("square_identity_residual: need k >= 1");
    Rational d = a * a * x * x + 4 * b;
    Rational phi = gen_phi(a, b, k - 1).eval(x);
    Rational psi = gen_psi(a, b, k).eval(x);
    return d * phi * phi - psi * psi - 4 * sign_unit(k) * rat_pow(b, k);
}

namespace {

RadicalPair radical_pair_impl(const Rational& a, const Rational& b, const Rational& x, long k) {
    check_nonzero(a, b);
    Rational d = a * a * x * x + 4 * b;
    if (d < 0)
        throw std::domain_error("radical pair: (a x)^2 < -4 b, Binet roots are complex");

    Rational u = gen_psi(a, b, k).eval(x) / 2;
    Rational phi = gen_phi(a, b, k - 1).eval(x);

    // The square identity turns the inner root into |phi_{k-1}| sqrt(d) / 2.
    Rational inner = u * u + sign_unit(k) * rat_pow(b, k);
    if (d * phi * phi / 4 != inner) throw std::logic_error("radical pair: square identity failed");

    Surd S(Rational(0), abs(phi) / 2, d);
    Surd rad_plus = Surd::from_rational(u) + S;
    Surd rad_minus = Surd::from_rational(u) - S;

    auto [alpha, beta] = binet_alpha_beta(a, b, x);
    Surd alpha_k = alpha.pow(static_cast<unsigned long>(k));
    Surd beta_k = beta.pow(static_cast<unsigned long>(k));
    if (alpha_k != Surd(u, phi / 2, d) || beta_k != Surd(u, -phi / 2, d))
        throw std::logic_error("radical pair: Binet power identity failed");

    bool alpha_is_plus = (alpha_k == rad_plus);
    if (!alpha_is_plus && beta_k != rad_plus)
        throw std::logic_error("radical pair: radicand does not match a Binet power");

    Surd root_plus, root_minus;
    if (k % 2 == 1) {
        // odd k-th roots are order preserving
        root_plus = alpha_is_plus ? alpha : beta;
        root_minus = alpha_is_plus ? beta : alpha;
    } else {
        // principal roots need nonnegative radicands: psi_k/2 >= |S| exactly
        if (rad_minus.sign() < 0)
            throw std::logic_error("radical pair: negative radicand for an even root");
        root_plus = (alpha_is_plus ? alpha : beta).abs();
        root_minus = (alpha_is_plus ? beta : alpha).abs();
    }
    return {rad_plus.canonicalized(),  rad_minus.canonicalized(),
            root_plus.canonicalized(), root_minus.canonicalized(),
            (root_plus + root_minus).canonicalized(),
            (root_plus - root_minus).canonicalized()};
}

} // namespace

RadicalPair odd_radical_pair(const Rational& a, const Rational& b, const Rational& x, long k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("odd_radical_pair: k must be odd >= 1");
    RadicalPair p = radical_pair_impl(a, b, x, k);
    Rational d = a * a * x * x + 4 * b;
    if (p.sum != Surd::from_rational(a * x) || p.diff != Surd::sqrt_of(d))
        throw std::logic_error("odd_radical_pair: identity failed");
    return p;
}

RadicalPair even_radical_pair(const Rational& a, const Rational& b, const Rational& x, long k) {
    if (k < 2 || k % 2 == 1) throw std::invalid_argument("even_radical_pair: k must be even >= 2");
    RadicalPair p = radical_pair_impl(a, b, x, k);
    Rational d = a * a * x * x + 4 * b;
    Surd abs_ax = Surd::from_rational(abs(a * x));
    Surd sqrt_d = Surd::sqrt_of(d);
    bool ok = b > 0 ? (p.diff == abs_ax && p.sum == sqrt_d) : (p.diff == sqrt_d && p.sum == abs_ax);
    if (!ok) throw std::logic_error("even_radical_pair: identity failed");
    return p;
}

Rational psi_composition_eval(const Rational& a, const Rational& b, long j, const Rational& x) {
    check_nonzero(a, b);
    if (j < 1) throw std::invalid_argument("psi_composition_eval: need j >= 1");
    if (x == 0) throw std::invalid_argument("psi_composition_eval: x must be nonzero");
    Rational arg = (x - b / x) / a;
    Rational lhs = gen_psi(a, b, j).eval(arg);
    Rational xj = rat_pow(x, j), bj = rat_pow(b, j);
    Rational rhs = j % 2 == 1 ? Rational(xj - bj / xj) : Rational(xj + bj / xj);
    if (lhs != rhs) throw std::logic_error("psi_composition_eval: composition identity failed");
    return lhs;
}

namespace {

ComposedRadical composed_impl(const Rational& a, const Rational& b, long j, const Rational& x) {
    Rational arg = (x - b / x) / a;
    Rational u = psi_composition_eval(a, b, j, x) / 2;
    Rational xj = rat_pow(x, j), bj = rat_pow(b, j);
    // the conjugate combination; its square is u^2 +- b^j
    Rational w = j % 2 == 1 ? Rational((xj + bj / xj) / 2) : Rational((xj - bj / xj) / 2);
    if (w * w != u * u + sign_unit(j) * bj)
        throw std::logic_error("composed radical: discriminant is not a perfect square");
    return {arg, u, u + abs(w), Rational(0)};
}

} // namespace

ComposedRadical composed_odd_radical(const Rational& a, const Rational& b, long j,
                                     const Rational& x) {
    if (j < 1 || j % 2 == 0)
        throw std::invalid_argument("composed_odd_radical: j must be odd >= 1");
    if (x == 0) throw std::invalid_argument("composed_odd_radical: x must be nonzero");
    ComposedRadical r = composed_impl(a, b, j, x);
    if (b > 0) {
        r.value = x > 0 ? x : -b / x;
    } else {
        bool take_x = (x > 0 && x * x >= -b) || (x < 0 && x * x <= -b);
        r.value = take_x ? x : -b / x;
    }
    if (rat_pow(r.value, j) != r.radicand)
        throw std::logic_error("composed_odd_radical: case selection failed");
    return r;
}

ComposedRadical composed_even_radical(const Rational& a, const Rational& b, long j,
                                      const Rational& x) {
    if (j < 2 || j % 2 == 1)
        throw std::invalid_argument("composed_even_radical: j must be even >= 2");
    if (x == 0) throw std::invalid_argument("composed_even_radical: x must be nonzero");
    ComposedRadical r = composed_impl(a, b, j, x);
    r.value = x * x >= abs(b) ? Rational(abs(x)) : Rational(abs(b / x));
    if (rat_pow(r.value, j) != r.radicand)
        throw std::logic_error("composed_even_radical: case selection failed");
    return r;
}

// ---------------------------------------------------------------------------
// denesting

namespace {

Integer floordiv(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

Integer floor_of(const Rational& r) { return floordiv(numerator(r), denominator(r)); }
Integer ceil_of(const Rational& r) { return -floordiv(-numerator(r), denominator(r)); }

// smallest-denominator rational in the closed interval [lo, hi]
Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::logic_error("simplest_in: empty interval");
    if (lo <= 0 && 0 <= hi) return Rational(0);
    if (hi < 0) return -simplest_in(-hi, -lo);
    Integer c = ceil_of(lo);
    if (Rational(c) <= hi) return Rational(c);
    Integer n = floor_of(lo);
    // both endpoints inside (n, n+1): recurse on the reciprocal tail
    return Rational(n) + Rational(1) / simplest_in(Rational(1) / (hi - Rational(n)),
                                                   Rational(1) / (lo - Rational(n)));
}

// primitive integer polynomial, positive leading coefficient optional
Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Integer l(1), g(0);
    for (const auto& c : p.coeffs()) l = lcm(l, denominator(c));
    for (const auto& c : p.coeffs()) g = gcd(g, numerator(c) * (l / denominator(c)));
    return p.scaled(Rational(l, g));
}

struct SturmChain {
    std::vector<Poly> seq;

    int variations(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_of(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = make_primitive(r);
    }
    return make_primitive(a);
}

SturmChain build_sturm(const Poly& p) {
    SturmChain chain;
    chain.seq.push_back(make_primitive(p));
    Poly d = make_primitive(p.derivative());
    if (!d.is_zero()) chain.seq.push_back(d);
    while (chain.seq.size() >= 2) {
        const Poly& a = chain.seq[chain.seq.size() - 2];
        const Poly& b = chain.seq.back();
        Poly r = poly_divrem(a, b).second;
        if (r.is_zero()) break;
        chain.seq.push_back(make_primitive(-r));
    }
    return chain;
}

} // namespace

std::vector<Rational> rational_roots(const Poly& p_in, unsigned effort_bound) {
    std::vector<Rational> roots;
    if (p_in.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    Poly p = make_primitive(p_in);
    if (p.degree() == 0) return roots;

    // strip roots at zero
    size_t shift = 0;
    while (p.coeff(static_cast<int>(shift)) == 0) ++shift;
    if (shift > 0) {
        roots.push_back(Rational(0));
        std::vector<Rational> c(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end());
        p = Poly(std::move(c));
        if (p.degree() == 0) return roots;
    }

    // squarefree part keeps the root set and keeps Sturm honest
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() > 0) p = poly_divrem(p, g).first;

    Integer lead = abs(numerator(p.leading())); // rational roots have denominator dividing this
    Rational bound(1);
    for (const auto& c : p.coeffs()) {
        Rational ratio = abs(c / p.leading());
        bound = std::max(bound, ratio);
    }
    bound += 1; // Cauchy bound: all real roots lie in (-bound, bound)

    SturmChain chain = build_sturm(p);
    struct Interval {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Interval> work{{-bound, bound, chain.variations(-bound), chain.variations(bound)}};
    std::vector<Interval> isolated;
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int n = iv.vlo - iv.vhi; // distinct real roots in (lo, hi]
        if (n <= 0) continue;
        if (n == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        int vmid = chain.variations(mid);
        work.push_back({iv.lo, mid, iv.vlo, vmid});
        work.push_back({mid, iv.hi, vmid, iv.vhi});
    }

    // Walk each isolating interval toward its root: the simplest rational
    // inside either is the root or has denominator above the rational-root
    // bound, in which case the root is irrational.
    unsigned max_steps = 64 * std::max(1u, effort_bound);
    for (auto& iv : isolated) {
        for (unsigned step = 0; step < max_steps; ++step) {
            Rational cand = simplest_in(iv.lo, iv.hi);
            if (p.eval(cand) == 0) {
                roots.push_back(cand);
                break;
            }
            if (denominator(cand) > lead) break; // no rational root in here
            Rational mid = (iv.lo + iv.hi) / 2;
            int vmid = chain.variations(mid);
            if (iv.vlo - vmid == 1) {
                iv.hi = mid;
                iv.vhi = vmid;
            } else {
                iv.lo = mid;
                iv.vlo = vmid;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

NestedRadical::NestedRadical(long k_, Rational u_, Rational v_, Rational d_)
    : k(k_), u(std::move(u_)), v(std::move(v_)), d(std::move(d_)) {
    if (k < 1) throw std::invalid_argument("NestedRadical: root index must be positive");
    if (d < 0) throw std::domain_error("NestedRadical: negative inner radicand");
    if (v == 0 || d == 0) {
        v = 0;
        d = 0;
    } else {
        Integer f;
        Integer s = square_free_part(numerator(d) * denominator(d), f);
        v *= Rational(f, denominator(d));
        d = Rational(s);
        if (d == 1) {
            u += v;
            v = 0;
            d = 0;
        }
    }
    if (k % 2 == 0 && Surd(u, v, d).sign() < 0)
        throw std::domain_error("NestedRadical: even root of a negative radicand");
}

std::string NestedRadical::str() const {
    std::ostringstream os;
    os << "(" << Surd(u, v, d).str() << ")^(1/" << k << ")";
    return os.str();
}

DenestResult denest(const NestedRadical& rad, unsigned search_bound) {
    if (rad.k > 64) throw std::invalid_argument("denest: root index capped at 64");
    long k = rad.k;
    Surd target(rad.u, rad.v, rad.d);
    if (target.is_zero()) return {DenestStatus::Denested, Surd(), std::nullopt};

    if (target.is_rational()) {
        Rational root;
        if (rational_kth_root(target.rational_part(), static_cast<unsigned>(k), root))
            return {DenestStatus::Denested, Surd::from_rational(root), std::nullopt};
    }

    // radicand = alpha^k or beta^k forces b^k = (-1)^{k+1} (v^2 d - u^2)
    Rational w = sign_unit(k) * (rad.v * rad.v * rad.d - rad.u * rad.u);
    if (w == 0) return {DenestStatus::NotRecognized, std::nullopt, std::nullopt};
    std::vector<Rational> b_candidates;
    Rational broot;
    if (k % 2 == 1) {
        if (rational_kth_root(w, static_cast<unsigned>(k), broot)) b_candidates.push_back(broot);
    } else if (w > 0 && rational_kth_root(w, static_cast<unsigned>(k), broot)) {
        b_candidates.push_back(broot);
        b_candidates.push_back(-broot);
    }

    for (const Rational& b : b_candidates) {
        if (b == 0) continue;
        // solve psi^{1,b}_k(y) = 2u; the witness has a x = y
        Poly target_poly = gen_psi(Rational(1), b, k) - Poly(2 * rad.u);
        for (const Rational& y : rational_roots(target_poly, search_bound)) {
            Rational D = y * y + 4 * b;
            if (D < 0) continue;
            Rational phi = gen_phi(Rational(1), b, k - 1).eval(y);

            Surd value;
            bool plus_branch = true;
            if (phi == 0) {
                // alpha = beta, radicand is the rational psi_k/2
                value = Surd(y / 2, Rational(1, 2), D);
            } else {
                if (phi * phi * D != 4 * rad.v * rad.v * rad.d)
                    throw std::logic_error("denest: square identity failed");
                Rational c = 2 * abs(rad.v) / abs(phi); // sqrt(D) = c sqrt(d)
                plus_branch = sign_of(phi) == sign_of(rad.v);
                value = Surd(y / 2, plus_branch ? Rational(c / 2) : Rational(-c / 2), rad.d);
            }
            if (k % 2 == 0) value = value.abs();
            if (value.pow(static_cast<unsigned long>(k)) != target) continue;

            // prefer a named-family row for the reported witness
            Rational a(1);
            for (long cand : {1, 2, 3}) {
                Rational ca(cand);
                bool table_row = (b == 1 && (ca == 1 || ca == 2)) ||
                                 (b == -1 && ca == 2) || (b == -2 && ca == 3);
                if (table_row) {
                    a = ca;
                    break;
                }
            }
            return {DenestStatus::Denested, value,
                    DenestWitness{a, b, y / a, k, plus_branch}};
        }
    }
    return {DenestStatus::NotRecognized, std::nullopt, std::nullopt};
}

} // namespace fiblucas
