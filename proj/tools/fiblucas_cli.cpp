// Command-line front end: polynomial generation, exact 2F1 sums,
// connection expansions, number/integral identities, radical reduction,
// denesting, and the verify-all gate.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "fiblucas/connect.hpp"
#include "fiblucas/decimal.hpp"
#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/integrals.hpp"
#include "fiblucas/numbers.hpp"
#include "fiblucas/radicals.hpp"
#include "fiblucas/seq.hpp"
#include "fiblucas/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using namespace fiblucas;
using nlohmann::json;

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back({num(c).str(), den(c).str()});
    return {{"coeffs", coeffs}};
}

json surd_json(const Surd& s) {
    return {{"p", to_string(s.rational_part())},
            {"q", to_string(s.surd_part())},
            {"d", to_string(s.radicand())}};
}

json expansion_json(const Expansion& e, std::optional<bool> verified) {
    json terms = json::array();
    for (const auto& t : e.terms)
        terms.push_back({{"m", t.m}, {"coeff", to_string(t.coeff)}});
    json out{{"degree", e.degree}, {"terms", terms}};
    if (verified) out["verified"] = *verified;
    return out;
}

std::string expansion_text(const Expansion& e) {
    std::string basis = kind_name(e.target.kind);
    std::string out;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += " + ";
        out += "(" + to_string(e.terms[i].coeff) + ")*" + basis + "_" +
               std::to_string(e.degree - 2 * e.terms[i].m);
    }
    return out;
}

struct KindParams {
    Kind kind;
    Rational a, b;
};

// "phi:1,1" or "psi:2,-1"
KindParams parse_kind_params(const std::string& text) {
    auto colon = text.find(':');
    auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos)
        throw std::invalid_argument("expected KIND:A,B, got '" + text + "'");
    return {parse_kind(text.substr(0, colon)),
            parse_rational(text.substr(colon + 1, comma - colon - 1)),
            parse_rational(text.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized Fibonacci/Lucas polynomial toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    unsigned precision = kDefaultDecimalDigits;
    std::uint64_t seed = 0;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--precision", precision, "decimal digits for surd rendering");
    app.add_option("--seed", seed, "seed for randomized suites");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family polynomial");
    std::string gen_kind = "phi", gen_a = "1", gen_b = "1", gen_family, gen_alpha = "1";
    long gen_deg = 0;
    gen->add_option("--kind", gen_kind, "phi or psi");
    gen->add_option("--a", gen_a, "first parameter (rational)");
    gen->add_option("--b", gen_b, "second parameter (rational)");
    gen->add_option("--deg", gen_deg, "degree j")->required();
    gen->add_option("--family", gen_family, "named family (overrides kind/a/b)");
    gen->add_option("--alpha", gen_alpha, "Dickson alpha");

    // hyp
    auto* hyp = app.add_subcommand("hyp", "exact terminating 2F1 sum");
    long hyp_m = 0;
    std::string hyp_a2, hyp_b1, hyp_z;
    hyp->add_option("--m", hyp_m, "termination order (numerator parameter -m)")->required();
    hyp->add_option("--a2", hyp_a2, "second numerator parameter")->required();
    hyp->add_option("--b1", hyp_b1, "denominator parameter")->required();
    hyp->add_option("--z", hyp_z, "argument")->required();

    // connect
    auto* conn = app.add_subcommand("connect", "connection expansion between two families");
    std::string conn_from, conn_to;
    long conn_deg = 0;
    bool conn_verify = false;
    conn->add_option("--from", conn_from, "source family KIND:A,B")->required();
    conn->add_option("--to", conn_to, "target family KIND:R,S")->required();
    conn->add_option("--deg", conn_deg, "degree i")->required();
    conn->add_flag("--verify", conn_verify, "expand and compare against the source polynomial");

    // invert
    auto* inv = app.add_subcommand("invert", "monomial inversion in a family basis");
    std::string inv_kind = "phi", inv_a = "1", inv_b = "1";
    long inv_deg = 0;
    bool inv_verify = false;
    inv->add_option("--kind", inv_kind, "phi or psi");
    inv->add_option("--a", inv_a, "first parameter");
    inv->add_option("--b", inv_b, "second parameter");
    inv->add_option("--deg", inv_deg, "monomial degree j")->required();
    inv->add_flag("--verify", inv_verify, "expand and compare against x^j");

    // numbers
    auto* num_cmd = app.add_subcommand("numbers", "identities among the six number families");
    bool num_suite = false;
    long num_imax = 20, num_i = -1;
    std::string num_from, num_to;
    num_cmd->add_flag("--suite", num_suite, "run the six summable identities");
    num_cmd->add_option("--imax", num_imax, "largest index for --suite");
    num_cmd->add_option("--from", num_from, "source family (F P Fcal L Q f)");
    num_cmd->add_option("--to", num_to, "target family");
    num_cmd->add_option("--i", num_i, "index for the cross-family identity");

    // integral
    auto* integ = app.add_subcommand("integral", "Chebyshev-weighted integral closed form");
    std::string integ_which = "phiT", integ_a = "1", integ_b = "1";
    long integ_i = 0, integ_j = 0;
    bool integ_quad = false;
    integ->add_option("--which", integ_which, "phiT or psiU");
    integ->add_option("--a", integ_a, "first parameter");
    integ->add_option("--b", integ_b, "second parameter");
    integ->add_option("--i", integ_i, "polynomial index")->required();
    integ->add_option("--j", integ_j, "Chebyshev index")->required();
    integ->add_flag("--quad-check", integ_quad, "attach the Gauss-Chebyshev residual");

    // radical
    auto* rad = app.add_subcommand("radical", "odd/even radical reduction");
    std::string rad_mode = "odd", rad_a = "1", rad_b = "1", rad_x = "1";
    long rad_k = 3;
    rad->add_option("--mode", rad_mode, "odd | even | composed-odd | composed-even");
    rad->add_option("--a", rad_a, "first parameter");
    rad->add_option("--b", rad_b, "second parameter");
    rad->add_option("--x", rad_x, "evaluation point");
    rad->add_option("--k", rad_k, "root index")->required();

    // denest
    auto* den_cmd = app.add_subcommand("denest", "denest (u + v sqrt(d))^(1/k)");
    std::string den_u, den_v, den_d;
    long den_k = 2;
    unsigned den_bound = 8;
    den_cmd->add_option("--k", den_k, "root index")->required();
    den_cmd->add_option("--u", den_u, "rational part")->required();
    den_cmd->add_option("--v", den_v, "surd coefficient")->required();
    den_cmd->add_option("--d", den_d, "inner radicand")->required();
    den_cmd->add_option("--bound", den_bound, "search effort bound");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run every identity suite");
    long verify_imax = 10;
    bool verify_corrupt = false, verify_cases = false;
    verify->add_option("--imax", verify_imax, "grid size scale");
    verify->add_flag("--corrupt", verify_corrupt,
                     "negative control: flip one connection coefficient");
    verify->add_flag("--cases", verify_cases, "include every case in the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            FamilyParams fam = [&] {
                if (!gen_family.empty()) {
                    auto tag = parse_family_tag(gen_family);
                    if (!tag) throw std::invalid_argument("unknown family '" + gen_family + "'");
                    return family_lookup(*tag, parse_rational(gen_alpha));
                }
                return FamilyParams(parse_kind(gen_kind), parse_rational(gen_a),
                                    parse_rational(gen_b));
            }();
            Poly p = gen_poly(fam, gen_deg).scaled(fam.display_scale);
            if (as_json) {
                json out{{"kind", kind_name(fam.kind)}, {"a", to_string(fam.a)},
                         {"b", to_string(fam.b)},       {"degree", gen_deg},
                         {"poly", poly_json(p)},        {"text", p.str()}};
                if (fam.tag) out["family"] = family_tag_name(*fam.tag);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << p.str() << "\n";
            }
        } else if (hyp->parsed()) {
            Rational v = eval_2f1_terminating(
                {hyp_m, parse_rational(hyp_a2), parse_rational(hyp_b1), parse_rational(hyp_z)});
            if (as_json)
                std::cout << json{{"m", hyp_m}, {"a2", hyp_a2},       {"b1", hyp_b1},
                                  {"z", hyp_z}, {"value", to_string(v)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << to_string(v) << "\n";
        } else if (conn->parsed()) {
            KindParams from = parse_kind_params(conn_from);
            KindParams to = parse_kind_params(conn_to);
            Expansion e = [&] {
                if (from.kind == Kind::Phi && to.kind == Kind::Psi)
                    return connect_phi_to_psi(from.a, from.b, to.a, to.b, conn_deg);
                if (from.kind == Kind::Psi && to.kind == Kind::Phi)
                    return connect_psi_to_phi(from.a, from.b, to.a, to.b, conn_deg);
                if (from.kind == Kind::Phi)
                    return connect_phi_to_phi(from.a, from.b, to.a, to.b, conn_deg);
                return connect_psi_to_psi(from.a, from.b, to.a, to.b, conn_deg);
            }();
            std::optional<bool> verified;
            if (conn_verify) verified = verify_expansion(e).equal;
            if (as_json)
                std::cout << expansion_json(e, verified).dump(2) << "\n";
            else {
                std::cout << kind_name(from.kind) << "_" << conn_deg << " = " << expansion_text(e)
                          << "\n";
                if (verified) std::cout << (*verified ? "verified exact\n" : "MISMATCH\n");
            }
            if (verified && !*verified) return 1;
        } else if (inv->parsed()) {
            Kind k = parse_kind(inv_kind);
            Expansion e = k == Kind::Phi
                              ? invert_phi(parse_rational(inv_a), parse_rational(inv_b), inv_deg)
                              : invert_psi(parse_rational(inv_a), parse_rational(inv_b), inv_deg);
            std::optional<bool> verified;
            if (inv_verify) verified = verify_expansion(e).equal;
            if (as_json)
                std::cout << expansion_json(e, verified).dump(2) << "\n";
            else {
                std::cout << "x^" << inv_deg << " = " << expansion_text(e) << "\n";
                if (verified) std::cout << (*verified ? "verified exact\n" : "MISMATCH\n");
            }
            if (verified && !*verified) return 1;
        } else if (num_cmd->parsed()) {
            if (num_suite) {
                auto cases = number_identity_suite(num_imax);
                long failures = 0;
                json jcases = json::array();
                for (const auto& c : cases) {
                    if (!c.pass) ++failures;
                    if (as_json)
                        jcases.push_back({{"identity", c.identity},
                                          {"i", c.i},
                                          {"lhs", c.lhs.str()},
                                          {"rhs", to_string(c.rhs)},
                                          {"status", c.pass ? "pass" : "fail"}});
                    else if (!c.pass)
                        std::cout << "FAIL i=" << c.i << " " << c.identity << "\n";
                }
                if (as_json)
                    std::cout << json{{"cases", jcases},
                                      {"checked", cases.size()},
                                      {"failures", failures}}
                                     .dump(2)
                              << "\n";
                else
                    std::cout << cases.size() << " identities checked, " << failures
                              << " failures\n";
                if (failures) return 1;
            } else {
                auto from = parse_number_tag(num_from);
                auto to = parse_number_tag(num_to);
                if (!from || !to || num_i < 0)
                    throw std::invalid_argument(
                        "numbers: need --suite or --from TAG --to TAG --i N");
                auto identity = cross_family_number(num_i, *from, *to);
                if (as_json) {
                    json terms = json::array();
                    for (const auto& t : identity.terms)
                        terms.push_back({{"m", t.m},
                                         {"coeff", to_string(t.coeff)},
                                         {"number", t.number.str()}});
                    std::cout << json{{"from", number_tag_name(*from)},
                                      {"to", number_tag_name(*to)},
                                      {"i", num_i},
                                      {"lhs", identity.lhs.str()},
                                      {"terms", terms},
                                      {"verified", identity.pass}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << identity.str() << "\n";
                }
                if (!identity.pass) return 1;
            }
        } else if (integ->parsed()) {
            Rational a = parse_rational(integ_a), b = parse_rational(integ_b);
            WeightedIntegral which;
            PiMultiple v;
            if (integ_which == "phiT") {
                which = WeightedIntegral::PhiT;
                v = integral_phi_T(a, b, integ_i, integ_j);
            } else if (integ_which == "psiU") {
                which = WeightedIntegral::PsiU;
                v = integral_psi_U(a, b, integ_i, integ_j);
            } else {
                throw std::invalid_argument("integral: --which must be phiT or psiU");
            }
            std::optional<double> residual;
            if (integ_quad)
                residual = quadrature_check(which, a, b, integ_i, integ_j, integ_i + integ_j + 2);
            if (as_json) {
                json out{{"pi_coeff", to_string(v.coeff)}};
                if (residual) out["quad_residual"] = *residual;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "(" << to_string(v.coeff) << ")*pi";
                if (residual) std::cout << "   quadrature residual " << *residual;
                std::cout << "\n";
            }
        } else if (rad->parsed()) {
            Rational a = parse_rational(rad_a), b = parse_rational(rad_b),
                     x = parse_rational(rad_x);
            if (rad_mode == "odd" || rad_mode == "even") {
                RadicalPair p = rad_mode == "odd" ? odd_radical_pair(a, b, x, rad_k)
                                                  : even_radical_pair(a, b, x, rad_k);
                if (as_json) {
                    std::cout << json{{"mode", rad_mode},
                                      {"radicand_plus", surd_json(p.radicand_plus)},
                                      {"radicand_minus", surd_json(p.radicand_minus)},
                                      {"sum", surd_json(p.sum)},
                                      {"diff", surd_json(p.diff)},
                                      {"sum_decimal", decimal_string(p.sum, precision)},
                                      {"diff_decimal", decimal_string(p.diff, precision)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "radicands (k=" << rad_k << "): " << p.radicand_plus.str()
                              << "  |  " << p.radicand_minus.str() << "\n"
                              << "root sum:  " << p.sum.str() << "  =  "
                              << decimal_string(p.sum, precision) << "\n"
                              << "root diff: " << p.diff.str() << "  =  "
                              << decimal_string(p.diff, precision) << "\n";
                }
            } else if (rad_mode == "composed-odd" || rad_mode == "composed-even") {
                ComposedRadical r = rad_mode == "composed-odd"
                                        ? composed_odd_radical(a, b, rad_k, x)
                                        : composed_even_radical(a, b, rad_k, x);
                if (as_json) {
                    std::cout << json{{"mode", rad_mode},
                                      {"arg", to_string(r.arg)},
                                      {"half_psi", to_string(r.half_psi)},
                                      {"radicand", to_string(r.radicand)},
                                      {"value", to_string(r.value)}}
                                     .dump(2)
                              << "\n";
                } else {
                    std::cout << "psi_" << rad_k << "((x - b/x)/a)/2 = " << to_string(r.half_psi)
                              << "\nradicand = " << to_string(r.radicand) << "\n"
                              << rad_k << "-th root = " << to_string(r.value) << "\n";
                }
            } else {
                throw std::invalid_argument("radical: unknown --mode '" + rad_mode + "'");
            }
        } else if (den_cmd->parsed()) {
            NestedRadical input(den_k, parse_rational(den_u), parse_rational(den_v),
                                parse_rational(den_d));
            DenestResult r = denest(input, den_bound);
            if (as_json) {
                json out{{"status",
                          r.status == DenestStatus::Denested ? "Denested" : "NotRecognized"}};
                if (r.value) {
                    out["value"] = surd_json(*r.value);
                    out["value_text"] = r.value->str();
                    out["value_decimal"] = decimal_string(*r.value, precision);
                }
                if (r.witness)
                    out["witness"] = {{"a", to_string(r.witness->a)},
                                      {"b", to_string(r.witness->b)},
                                      {"x", to_string(r.witness->x)},
                                      {"k", r.witness->k},
                                      {"branch", r.witness->plus_branch ? "plus" : "minus"}};
                std::cout << out.dump(2) << "\n";
            } else if (r.status == DenestStatus::Denested) {
                std::cout << input.str() << " = " << r.value->str() << "  =  "
                          << decimal_string(*r.value, precision) << "\n";
                if (r.witness)
                    std::cout << "witness: (a,b) = (" << to_string(r.witness->a) << ","
                              << to_string(r.witness->b) << "), x = " << to_string(r.witness->x)
                              << ", branch " << (r.witness->plus_branch ? "plus" : "minus")
                              << "\n";
            } else {
                std::cout << input.str() << ": NotRecognized\n";
            }
        } else if (verify->parsed()) {
            Report report = run_verify_all({verify_imax, seed, verify_corrupt});
            if (as_json)
                std::cout << report.to_json(2, verify_cases) << "\n";
            else
                std::cout << report.summary_text();
            return report.all_pass() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
