#pragma once

// Connection formulas between the two generalized classes (and within
// each class), with exact verification against recurrence-generated
// polynomials. Every coefficient is a terminating 2F1 sum evaluated in
// exact rational arithmetic.

#include "fiblucas/expansion.hpp"
#include "fiblucas/poly.hpp"

#include <span>

namespace fiblucas {

// phi^{a,b}_i = (a/r)^i sum_m c_{i-2m} (-s)^m C(i,m)
//               2F1(-m, m-i; -i; b r^2/(a^2 s)) psi^{r,s}_{i-2m}
Expansion connect_phi_to_psi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i);

// psi^{r,s}_i = i sum_m s^m (r/a)^{i-2m} C(i-m,m)/(i-m)
//               2F1(-m, i-m; i-2m+2; b r^2/(a^2 s)) phi^{a,b}_{i-2m}
// (i = 0 is the direct 2 phi_0 expansion)
Expansion connect_psi_to_phi(const Rational& r, const Rational& s, const Rational& a,
                             const Rational& b, long i);

// phi^{a,b}_i = (a/r)^i sum_m (-s)^m C(i,m) (i-2m+1)/(i-m+1)
//               2F1(-m, m-i-1; -i; b r^2/(a^2 s)) phi^{r,s}_{i-2m}
Expansion connect_phi_to_phi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i);

// psi^{a,b}_i = (a/r)^i sum_m c_{i-2m} (-s)^m C(i,m)
//               2F1(-m, m-i; 1-i; b r^2/(a^2 s)) psi^{r,s}_{i-2m}
// (i = 0 is the direct identity expansion)
Expansion connect_psi_to_psi(const Rational& a, const Rational& b, const Rational& r,
                             const Rational& s, long i);

// sum of coeff * target_{degree-2m}, targets generated by recurrence
Poly expand_expansion(const Expansion& e);

struct ExpansionCheck {
    bool equal = false;
    Poly difference; // expanded minus expected, zero when equal
};

// Expands against the target family and compares with the source
// polynomial (or x^degree when the expansion has no source family).
ExpansionCheck verify_expansion(const Expansion& e);
ExpansionCheck verify_expansion_against(const Expansion& e, const Poly& expected);

// max_theta |2 sin(theta) sum_m c_{i-2m} cos((i-2m) theta) - sin((i+1) theta)|,
// the one floating-point check in this module
double trig_identity_check(long i, std::span<const double> thetas);

} // namespace fiblucas
