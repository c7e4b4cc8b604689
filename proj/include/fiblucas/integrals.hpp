#pragma once

// Chebyshev-weighted integrals of the generalized polynomials, as exact
// rational multiples of pi. The closed forms are direct 2F1 evaluations;
// the *_via_connection routes go through the connection expansion and
// Chebyshev orthogonality and serve as an independent check, as does the
// Gauss-Chebyshev quadrature residual.

#include "fiblucas/rational.hpp"

namespace fiblucas {

struct PiMultiple {
    Rational coeff; // the integral equals coeff * pi
    bool operator==(const PiMultiple& o) const { return coeff == o.coeff; }
};

// integral_{-1}^{1} phi^{a,b}_i(x) T_j(x) / sqrt(1-x^2) dx
PiMultiple integral_phi_T(const Rational& a, const Rational& b, long i, long j);
PiMultiple integral_phi_T_via_connection(const Rational& a, const Rational& b, long i, long j);

// integral_{-1}^{1} sqrt(1-x^2) psi^{r,s}_i(x) U_j(x) dx, i >= 1
PiMultiple integral_psi_U(const Rational& r, const Rational& s, long i, long j);
PiMultiple integral_psi_U_via_connection(const Rational& r, const Rational& s, long i, long j);

enum class WeightedIntegral { PhiT, PsiU };

// Gauss-Chebyshev numeric value minus coeff*pi; n_nodes >= i + j + 1 keeps
// the rule exact for the polynomial integrand.
double quadrature_check(WeightedIntegral which, const Rational& a, const Rational& b, long i,
                        long j, long n_nodes);

} // namespace fiblucas
