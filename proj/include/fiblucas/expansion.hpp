#pragma once

// A finite expansion sum_m coeff_m * basis_{degree - 2m} against one of
// the generalized families. Connection formulas and the monomial
// inversions both produce this shape; inversions have no source family
// (the source is x^degree).

#include "fiblucas/family.hpp"

#include <vector>

namespace fiblucas {

struct ExpansionTerm {
    long m = 0;      // basis index is degree - 2m
    Rational coeff;
};

struct Expansion {
    std::optional<FamilyParams> source;
    FamilyParams target;
    long degree = 0;
    std::vector<ExpansionTerm> terms;
};

} // namespace fiblucas
