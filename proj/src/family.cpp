#include "fiblucas/family.hpp"

#include <algorithm>

namespace fiblucas {

FamilyParams family_lookup(FamilyTag tag, const Rational& alpha) {
    switch (tag) {
    case FamilyTag::Fibonacci:   return {Kind::Phi, 1, 1, tag};
    case FamilyTag::Pell:        return {Kind::Phi, 2, 1, tag};
    case FamilyTag::Fermat:      return {Kind::Phi, 3, -2, tag};
    case FamilyTag::ChebyshevU:  return {Kind::Phi, 2, -1, tag};
    case FamilyTag::DicksonE:    return {Kind::Phi, 1, -alpha, tag};
    case FamilyTag::Lucas:       return {Kind::Psi, 1, 1, tag};
    case FamilyTag::PellLucas:   return {Kind::Psi, 2, 1, tag};
    case FamilyTag::FermatLucas: return {Kind::Psi, 3, -2, tag};
    case FamilyTag::ChebyshevT:  return {Kind::Psi, 2, -1, tag, Rational(1, 2)};
    case FamilyTag::DicksonD:    return {Kind::Psi, 1, -alpha, tag};
    }
    throw std::invalid_argument("unknown family tag");
}

std::string kind_name(Kind k) { return k == Kind::Phi ? "phi" : "psi"; }

Kind parse_kind(const std::string& name) {
    if (name == "phi") return Kind::Phi;
    if (name == "psi") return Kind::Psi;
    throw std::invalid_argument("unknown kind '" + name + "' (expected phi or psi)");
}

std::string family_tag_name(FamilyTag t) {
    switch (t) {
    case FamilyTag::Fibonacci:   return "fibonacci";
    case FamilyTag::Pell:        return "pell";
    case FamilyTag::Fermat:      return "fermat";
    case FamilyTag::ChebyshevU:  return "chebyshev-u";
    case FamilyTag::DicksonE:    return "dickson-e";
    case FamilyTag::Lucas:       return "lucas";
    case FamilyTag::PellLucas:   return "pell-lucas";
    case FamilyTag::FermatLucas: return "fermat-lucas";
    case FamilyTag::ChebyshevT:  return "chebyshev-t";
    case FamilyTag::DicksonD:    return "dickson-d";
    }
    return "?";
}

std::optional<FamilyTag> parse_family_tag(const std::string& name) {
    static const FamilyTag all[] = {
        FamilyTag::Fibonacci, FamilyTag::Pell,      FamilyTag::Fermat,
        FamilyTag::ChebyshevU, FamilyTag::DicksonE, FamilyTag::Lucas,
        FamilyTag::PellLucas, FamilyTag::FermatLucas, FamilyTag::ChebyshevT,
        FamilyTag::DicksonD,
    };
    for (FamilyTag t : all)
        if (family_tag_name(t) == name) return t;
    return std::nullopt;
}

void FamilyParams::check_tag_row() const {
    // Dickson rows keep alpha = -b free; everything else is a fixed row.
    struct Row {
        Kind kind;
        int a, b; // b = 0 marks the free Dickson alpha
    };
    Row row{};
    switch (*tag) {
    case FamilyTag::Fibonacci:   row = {Kind::Phi, 1, 1}; break;
    case FamilyTag::Pell:        row = {Kind::Phi, 2, 1}; break;
    case FamilyTag::Fermat:      row = {Kind::Phi, 3, -2}; break;
    case FamilyTag::ChebyshevU:  row = {Kind::Phi, 2, -1}; break;
    case FamilyTag::DicksonE:    row = {Kind::Phi, 1, 0}; break;
    case FamilyTag::Lucas:       row = {Kind::Psi, 1, 1}; break;
    case FamilyTag::PellLucas:   row = {Kind::Psi, 2, 1}; break;
    case FamilyTag::FermatLucas: row = {Kind::Psi, 3, -2}; break;
    case FamilyTag::ChebyshevT:  row = {Kind::Psi, 2, -1}; break;
    case FamilyTag::DicksonD:    row = {Kind::Psi, 1, 0}; break;
    }
    bool ok = kind == row.kind && a == row.a && (row.b == 0 || b == row.b);
    if (!ok)
        throw std::invalid_argument("family tag '" + family_tag_name(*tag) +
                                    "' does not match parameters " + kind_name(kind) + "(" +
                                    to_string(a) + "," + to_string(b) + ")");
}

std::string FamilyParams::str() const {
    std::string s = kind_name(kind) + "(" + to_string(a) + "," + to_string(b) + ")";
    if (tag) s += "[" + family_tag_name(*tag) + "]";
    return s;
}

} // namespace fiblucas
