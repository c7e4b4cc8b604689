#pragma once

// The two generalized classes and their named special cases. A phi family
// follows phi_j = a x phi_{j-1} + b phi_{j-2} with seeds 1, a x; a psi
// family follows the same recurrence with seeds 2, a x.

#include "fiblucas/rational.hpp"

#include <optional>
#include <string>

namespace fiblucas {

enum class Kind { Phi, Psi };

enum class FamilyTag {
    Fibonacci,   // phi(1, 1), F_{j+1}
    Pell,        // phi(2, 1), P_{j+1}
    Fermat,      // phi(3, -2)
    ChebyshevU,  // phi(2, -1)
    DicksonE,    // phi(1, -alpha)
    Lucas,       // psi(1, 1), L_j
    PellLucas,   // psi(2, 1), Q_j
    FermatLucas, // psi(3, -2), f_j
    ChebyshevT,  // psi(2, -1) with display scale 1/2 (T_j = psi_j / 2)
    DicksonD,    // psi(1, -alpha)
};

struct FamilyParams {
    Kind kind;
    Rational a, b;
    std::optional<FamilyTag> tag;
    Rational display_scale{1};

    FamilyParams(Kind k, Rational a_, Rational b_, std::optional<FamilyTag> t = std::nullopt,
                 Rational scale = Rational(1))
        : kind(k), a(std::move(a_)), b(std::move(b_)), tag(t), display_scale(std::move(scale)) {
        if (a == 0 || b == 0)
            throw std::invalid_argument("family parameters must be nonzero");
        if (tag) check_tag_row();
    }

    bool operator==(const FamilyParams& o) const {
        return kind == o.kind && a == o.a && b == o.b;
    }
    std::string str() const;

private:
    void check_tag_row() const; // a tag pins (kind, a, b) to its named row
};

// Named-family parameters; alpha applies to the Dickson families only.
FamilyParams family_lookup(FamilyTag tag, const Rational& alpha = Rational(1));

// The inversion weight: 1/2 at index 0, otherwise 1.
inline Rational c_coeff(long j) { return j == 0 ? Rational(1, 2) : Rational(1); }

std::string kind_name(Kind k);
Kind parse_kind(const std::string& name);
std::string family_tag_name(FamilyTag t);
std::optional<FamilyTag> parse_family_tag(const std::string& name);

} // namespace fiblucas
