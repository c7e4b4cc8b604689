#include "fiblucas/numbers.hpp"

#include "fiblucas/connect.hpp"

#include <sstream>

namespace fiblucas {

FamilyParams number_family(NumberTag t) {
    switch (t) {
    case NumberTag::Fibonacci:   return family_lookup(FamilyTag::Fibonacci);
    case NumberTag::Pell:        return family_lookup(FamilyTag::Pell);
    case NumberTag::Fermat:      return family_lookup(FamilyTag::Fermat);
    case NumberTag::Lucas:       return family_lookup(FamilyTag::Lucas);
    case NumberTag::PellLucas:   return family_lookup(FamilyTag::PellLucas);
    case NumberTag::FermatLucas: return family_lookup(FamilyTag::FermatLucas);
    }
    throw std::invalid_argument("unknown number tag");
}

bool is_phi_kind(NumberTag t) { return number_family(t).kind == Kind::Phi; }

std::string number_tag_name(NumberTag t) {
    switch (t) {
    case NumberTag::Fibonacci:   return "F";
    case NumberTag::Pell:        return "P";
    case NumberTag::Fermat:      return "Fcal";
    case NumberTag::Lucas:       return "L";
    case NumberTag::PellLucas:   return "Q";
    case NumberTag::FermatLucas: return "f";
    }
    return "?";
}

std::optional<NumberTag> parse_number_tag(const std::string& name) {
    static const NumberTag all[] = {NumberTag::Fibonacci, NumberTag::Pell,
                                    NumberTag::Fermat,    NumberTag::Lucas,
                                    NumberTag::PellLucas, NumberTag::FermatLucas};
    for (NumberTag t : all)
        if (number_tag_name(t) == name) return t;
    return std::nullopt;
}

Integer NumberSeq::value(NumberTag t, long n) {
    if (n < 0) throw std::invalid_argument("number index must be nonnegative");
    auto idx = static_cast<size_t>(t);
    std::lock_guard<std::mutex> lock(grow_);
    auto& v = values_[idx];
    if (v.empty()) {
        FamilyParams fam = number_family(t);
        // family parameters of the six number families are integers
        Integer a = numerator(fam.a), b = numerator(fam.b);
        if (fam.kind == Kind::Phi) {
            v = {Integer(0), Integer(1)};
        } else {
            v = {Integer(2), a};
        }
    }
    FamilyParams fam = number_family(t);
    Integer a = numerator(fam.a), b = numerator(fam.b);
    while (v.size() <= static_cast<size_t>(n)) {
        size_t k = v.size();
        v.push_back(a * v[k - 1] + b * v[k - 2]);
    }
    return v[static_cast<size_t>(n)];
}

namespace {

NumberSeq& global_numbers() {
    static NumberSeq seq;
    return seq;
}

long number_index(NumberTag t, long poly_degree) {
    return is_phi_kind(t) ? poly_degree + 1 : poly_degree;
}

} // namespace

std::vector<NumberIdentityCase> number_identity_suite(long i_max) {
    if (i_max < 2) throw std::invalid_argument("number_identity_suite: need i_max >= 2");
    NumberSeq& N = global_numbers();
    std::vector<NumberIdentityCase> out;
    auto push = [&](const std::string& name, long i, Integer lhs, Rational rhs) {
        out.push_back({name, i, lhs, rhs, Rational(lhs) == rhs});
    };
    for (long i = 2; i <= i_max; ++i) {
        Rational sumFL(0), sumPQ(0), sumFf(0);
        for (long m = 0; m <= i / 2; ++m) {
            Rational c = c_coeff(i - 2 * m);
            Rational sgn = (m % 2 == 0) ? Rational(1) : Rational(-1);
            sumFL += c * sgn * Rational(N.value(NumberTag::Lucas, i - 2 * m));
            sumPQ += c * sgn * Rational(N.value(NumberTag::PellLucas, i - 2 * m));
            sumFf += c * rat_pow(Rational(2), m) * Rational(N.value(NumberTag::FermatLucas, i - 2 * m));
        }
        push("F_{i+1} = sum c (-1)^m L_{i-2m}", i, N.value(NumberTag::Fibonacci, i + 1), sumFL);
        push("P_{i+1} = sum c (-1)^m Q_{i-2m}", i, N.value(NumberTag::Pell, i + 1), sumPQ);
        push("Fcal_{i+1} = sum c 2^m f_{i-2m}", i, N.value(NumberTag::Fermat, i + 1), sumFf);
        push("L_i = F_{i+1} + F_{i-1}", i, N.value(NumberTag::Lucas, i),
             Rational(N.value(NumberTag::Fibonacci, i + 1) + N.value(NumberTag::Fibonacci, i - 1)));
        push("Q_i = P_{i+1} + P_{i-1}", i, N.value(NumberTag::PellLucas, i),
             Rational(N.value(NumberTag::Pell, i + 1) + N.value(NumberTag::Pell, i - 1)));
        push("f_i = Fcal_{i+1} - 2 Fcal_{i-1}", i, N.value(NumberTag::FermatLucas, i),
             Rational(N.value(NumberTag::Fermat, i + 1) - 2 * N.value(NumberTag::Fermat, i - 1)));
    }
    return out;
}

CrossFamilyIdentity cross_family_number(long i, NumberTag from, NumberTag to) {
    if (i < 0) throw std::invalid_argument("cross_family_number: negative index");
    FamilyParams src = number_family(from), tgt = number_family(to);
    Expansion e = [&] {
        if (src.kind == Kind::Phi && tgt.kind == Kind::Psi)
            return connect_phi_to_psi(src.a, src.b, tgt.a, tgt.b, i);
        if (src.kind == Kind::Psi && tgt.kind == Kind::Phi)
            return connect_psi_to_phi(src.a, src.b, tgt.a, tgt.b, i);
        if (src.kind == Kind::Phi)
            return connect_phi_to_phi(src.a, src.b, tgt.a, tgt.b, i);
        return connect_psi_to_psi(src.a, src.b, tgt.a, tgt.b, i);
    }();

    NumberSeq& N = global_numbers();
    CrossFamilyIdentity out{from, to, i, number_index(from, i), N.value(from, number_index(from, i)),
                            {}, Rational(0), false};
    for (const auto& term : e.terms) {
        Integer n = N.value(to, number_index(to, i - 2 * term.m));
        out.terms.push_back({term.m, term.coeff, n});
        out.rhs += term.coeff * Rational(n);
    }
    out.pass = Rational(out.lhs) == out.rhs;
    return out;
}

std::string CrossFamilyIdentity::str() const {
    std::ostringstream os;
    os << number_tag_name(from) << "_" << lhs_index << " = ";
    for (size_t t = 0; t < terms.size(); ++t) {
        if (t) os << " + ";
        os << "(" << to_string(terms[t].coeff) << ")*" << number_tag_name(to) << "_"
           << number_index(to, i - 2 * terms[t].m);
    }
    os << "  [" << lhs << " = " << to_string(rhs) << (pass ? ", exact]" : ", MISMATCH]");
    return os.str();
}

} // namespace fiblucas
