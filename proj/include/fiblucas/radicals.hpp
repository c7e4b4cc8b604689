#pragma once

// Radical reduction built on the two generalized classes: the square
// identity (a^2 x^2 + 4b) phi_{k-1}^2 - psi_k^2 = 4 (-1)^{k+1} b^k, the
// odd/even radical pairs it yields, the composition identity
// psi_j((x - b/x)/a) = x^j -+ b^j/x^j, and a recognizer that denests
// k-th roots of quadratic surds by recovering the family witness.
// Everything is verified in exact Q(sqrt(d)) arithmetic.

#include "fiblucas/poly.hpp"
#include "fiblucas/surd.hpp"

#include <optional>

namespace fiblucas {

// (a^2 x^2 + 4b) phi_{k-1}(x)^2 - psi_k(x)^2 - 4 (-1)^{k+1} b^k, expected 0
Rational square_identity_residual(const Rational& a, const Rational& b, const Rational& x, long k);

struct RadicalPair {
    Surd radicand_plus;  // psi_k/2 + sqrt(psi_k^2/4 +- b^k), as an element of Q(sqrt(d))
    Surd radicand_minus;
    Surd root_plus; // exact k-th root of radicand_plus
    Surd root_minus;
    Surd sum;  // root_plus + root_minus
    Surd diff; // root_plus - root_minus
};

// k odd: sum = a x, diff = sqrt(a^2 x^2 + 4 b)
RadicalPair odd_radical_pair(const Rational& a, const Rational& b, const Rational& x, long k);
// k even: diff = |a x| and sum = sqrt(a^2 x^2 + 4 b) for b > 0, swapped for b < 0
RadicalPair even_radical_pair(const Rational& a, const Rational& b, const Rational& x, long k);

// psi_j((x - b/x)/a) = x^j - b^j/x^j (j odd) or x^j + b^j/x^j (j even);
// evaluates both sides exactly and returns the common value
Rational psi_composition_eval(const Rational& a, const Rational& b, long j, const Rational& x);

struct ComposedRadical {
    Rational arg;      // (x - b/x)/a
    Rational half_psi; // psi_j(arg)/2
    Rational radicand; // half_psi + sqrt(half_psi^2 +- b^j), rational by construction
    Rational value;    // the exact j-th root of radicand
};

// j odd: value is x or -b/x per the sign/region table
ComposedRadical composed_odd_radical(const Rational& a, const Rational& b, long j,
                                     const Rational& x);
// j even: value is |x| outside (-sqrt|b|, sqrt|b|), |b/x| inside
ComposedRadical composed_even_radical(const Rational& a, const Rational& b, long j,
                                      const Rational& x);

// (u + v sqrt(d))^(1/k). Construction canonicalizes: square factors of d
// migrate into v, a perfect-square d folds into u; for even k the
// radicand must be nonnegative.
struct NestedRadical {
    long k;
    Rational u, v, d;
    NestedRadical(long k, Rational u, Rational v, Rational d);
    Surd radicand() const { return Surd(u, v, d); }
    std::string str() const;
};

enum class DenestStatus { Denested, NotRecognized };

struct DenestWitness {
    Rational a, b, x;
    long k;
    bool plus_branch; // radicand = alpha^k (else beta^k)
};

struct DenestResult {
    DenestStatus status = DenestStatus::NotRecognized;
    std::optional<Surd> value;          // present iff Denested; value^k == radicand
    std::optional<DenestWitness> witness;
};

// Recovers (a, b, x) with radicand = alpha(x)^k or beta(x)^k when one
// exists: b comes from the exact k-th root of (-1)^{k+1}(v^2 d - u^2)
// (forced by the square identity), x from complete rational-root isolation of
// psi_k = 2u. search_bound only caps the refinement effort.
DenestResult denest(const NestedRadical& rad, unsigned search_bound = 8);

// All rational roots of p, exact and complete (used by denest; exposed
// for tests).
std::vector<Rational> rational_roots(const Poly& p, unsigned effort_bound = 8);

} // namespace fiblucas
