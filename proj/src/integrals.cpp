#include "fiblucas/integrals.hpp"

#include "fiblucas/connect.hpp"
#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/seq.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace fiblucas {

namespace {

void check_indices(long i, long j) {
    if (i < 0 || j < 0) throw std::invalid_argument("integral indices must be nonnegative");
}

bool vanishes(long i, long j) { return (i + j) % 2 != 0 || j > i; }

} // namespace

PiMultiple integral_phi_T(const Rational& a, const Rational& b, long i, long j) {
    check_indices(i, j);
    if (vanishes(i, j)) return {Rational(0)};
    long m = (i - j) / 2;
    Rational z = Rational(-4) * b / (a * a);
    return {rat_pow(a / 2, i) * Rational(binomial(i, m)) *
            eval_2f1_terminating({m, Rational(-(i + j) / 2), Rational(-i), z})};
}

PiMultiple integral_phi_T_via_connection(const Rational& a, const Rational& b, long i, long j) {
    check_indices(i, j);
    if (vanishes(i, j)) return {Rational(0)};
    // phi_i = sum_m K_m psi^{2,-1}_{i-2m} = sum_m 2 K_m T_{i-2m};
    // T-norms: pi for T_0, pi/2 otherwise.
    Expansion e = connect_phi_to_psi(a, b, Rational(2), Rational(-1), i);
    Rational K = e.terms[static_cast<size_t>((i - j) / 2)].coeff;
    return {j == 0 ? 2 * K : K};
}

PiMultiple integral_psi_U(const Rational& r, const Rational& s, long i, long j) {
    check_indices(i, j);
    if (i < 1) throw std::invalid_argument("integral_psi_U: need i >= 1");
    if (vanishes(i, j)) return {Rational(0)};
    long m = (i - j) / 2;
    Rational z = -(r * r) / (4 * s);
    return {Rational(i) * rat_pow(r / 2, j) * Rational(binomial((i + j) / 2, m)) * rat_pow(s, m) /
            Rational(i + j) * eval_2f1_terminating({m, Rational((i + j) / 2), Rational(j + 2), z})};
}

PiMultiple integral_psi_U_via_connection(const Rational& r, const Rational& s, long i, long j) {
    check_indices(i, j);
    if (i < 1) throw std::invalid_argument("integral_psi_U_via_connection: need i >= 1");
    if (vanishes(i, j)) return {Rational(0)};
    // psi_i = sum_m A_m U_{i-2m}; U-norm is pi/2 throughout.
    Expansion e = connect_psi_to_phi(r, s, Rational(2), Rational(-1), i);
    return {e.terms[static_cast<size_t>((i - j) / 2)].coeff / 2};
}

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

BigFloat to_bigfloat(const Rational& r) {
    return numerator(r).convert_to<BigFloat>() / denominator(r).convert_to<BigFloat>();
}

BigFloat eval_poly_big(const Poly& p, const BigFloat& x) {
    BigFloat v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        v = v * x + to_bigfloat(*it);
    return v;
}

} // namespace

double quadrature_check(WeightedIntegral which, const Rational& a, const Rational& b, long i,
                        long j, long n_nodes) {
    check_indices(i, j);
    if (n_nodes < i + j + 1) throw std::invalid_argument("quadrature_check: too few nodes");
    // The closed-form values on the acceptance grid reach ~1e8, so meeting
    // an absolute 1e-10 bar needs far more than double precision in the
    // rule itself; 50-digit floats keep the numeric noise negligible.
    const BigFloat pi = 4 * atan(BigFloat(1));
    BigFloat numeric = 0;
    Rational closed;
    if (which == WeightedIntegral::PhiT) {
        Poly p = gen_phi(a, b, i);
        for (long k = 1; k <= n_nodes; ++k) {
            BigFloat theta = (2 * BigFloat(k) - 1) * pi / (2 * n_nodes);
            numeric += eval_poly_big(p, cos(theta)) * cos(j * theta);
        }
        numeric *= pi / n_nodes;
        closed = integral_phi_T(a, b, i, j).coeff;
    } else {
        Poly p = gen_psi(a, b, i);
        for (long k = 1; k <= n_nodes; ++k) {
            BigFloat theta = BigFloat(k) * pi / (n_nodes + 1);
            BigFloat w = pi / (n_nodes + 1) * sin(theta) * sin(theta);
            // U_j(cos theta) = sin((j+1) theta) / sin(theta)
            numeric += w * eval_poly_big(p, cos(theta)) * sin((j + 1) * theta) / sin(theta);
        }
        closed = integral_psi_U(a, b, i, j).coeff;
    }
    BigFloat residual = numeric - to_bigfloat(closed) * pi;
    return residual.convert_to<double>();
}

} // namespace fiblucas
