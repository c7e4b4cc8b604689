#pragma once

// The six celebrated number families at x = 1 and the identities linking
// them. Indexing follows the classical conventions: phi-kind families carry the
// shift F_{i+1} = phi_i(1) (so F_0 = 0), the psi-kind ones do not.

#include "fiblucas/expansion.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace fiblucas {

enum class NumberTag { Fibonacci, Pell, Fermat, Lucas, PellLucas, FermatLucas };

FamilyParams number_family(NumberTag t);
bool is_phi_kind(NumberTag t);
std::string number_tag_name(NumberTag t); // F, P, Fcal, L, Q, f
std::optional<NumberTag> parse_number_tag(const std::string& name);

// Cached integer values; value(t, n) is the n-th number of the family.
class NumberSeq {
public:
    Integer value(NumberTag t, long n);

private:
    std::vector<Integer> values_[6];
    std::mutex grow_;
};

struct NumberIdentityCase {
    std::string identity;
    long i;
    Integer lhs;
    Rational rhs;
    bool pass;
};

// The six summable relations (F/L, P/Q, Fcal/f pairs) for 2 <= i <= i_max.
std::vector<NumberIdentityCase> number_identity_suite(long i_max);

struct CrossFamilyTerm {
    long m;
    Rational coeff;
    Integer number; // the target-family number the coefficient multiplies
};

struct CrossFamilyIdentity {
    NumberTag from, to;
    long i;
    long lhs_index; // i+1 for phi-kind sources, i otherwise
    Integer lhs;
    std::vector<CrossFamilyTerm> terms;
    Rational rhs;
    bool pass;
    std::string str() const;
};

// Instantiates the matching connection formula at x = 1.
CrossFamilyIdentity cross_family_number(long i, NumberTag from, NumberTag to);

} // namespace fiblucas
