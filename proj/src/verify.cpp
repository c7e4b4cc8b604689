#include "fiblucas/verify.hpp"

#include "fiblucas/connect.hpp"
#include "fiblucas/hyp2f1.hpp"
#include "fiblucas/integrals.hpp"
#include "fiblucas/numbers.hpp"
#include "fiblucas/radicals.hpp"
#include "fiblucas/seq.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace fiblucas {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string pad(long v, int width = 3) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%0*ld", width, v);
    return buf;
}

std::string params_str(const Rational& a, const Rational& b) {
    return "(" + to_string(a) + "," + to_string(b) + ")";
}

// run one case; exceptions become failures, never aborts
template <typename Fn>
void run_case(SuiteReport& suite, std::string key, std::string inputs, Fn&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        suite.fail(std::move(key), std::move(inputs), "no exception", e.what());
    }
}

} // namespace

void SuiteReport::add(CaseResult c) {
    switch (c.status) {
    case CaseStatus::Pass: ++passed; break;
    case CaseStatus::Fail: ++failed; break;
    case CaseStatus::Skipped: ++skipped; break;
    }
    cases.push_back(std::move(c));
}

void SuiteReport::pass(std::string key, std::string inputs, std::string expected) {
    add({std::move(key), std::move(inputs), expected, expected, CaseStatus::Pass});
}

void SuiteReport::fail(std::string key, std::string inputs, std::string expected,
                       std::string got) {
    add({std::move(key), std::move(inputs), std::move(expected), std::move(got),
         CaseStatus::Fail});
}

void SuiteReport::finish() {
    std::sort(cases.begin(), cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Rng::rational(long max_num, long max_den, bool allow_negative) {
    long n = range(1, max_num);
    long d = range(1, max_den);
    if (allow_negative && range(0, 1) == 1) n = -n;
    return Rational(n, d);
}

const std::vector<std::pair<Rational, Rational>>& table_param_pool() {
    static const std::vector<std::pair<Rational, Rational>> pool = {
        {Rational(1), Rational(1)},  // Fibonacci / Lucas
        {Rational(2), Rational(1)},  // Pell / Pell-Lucas
        {Rational(3), Rational(-2)}, // Fermat / Fermat-Lucas
        {Rational(2), Rational(-1)}, // Chebyshev U / T
        {Rational(1), Rational(-1)}, // Dickson, alpha = 1
        {Rational(1), Rational(-2)}, // Dickson, alpha = 2
    };
    return pool;
}

SuiteReport suite_power_inversion(long jmax, std::uint64_t seed) {
    SuiteReport suite{"power-inversion"};
    Rng rng(seed);
    auto pool = table_param_pool();
    for (int t = 0; t < 20; ++t) {
        Rational ra = rng.rational(9, 4);
        Rational rb = rng.rational(9, 4);
        pool.emplace_back(std::move(ra), std::move(rb));
    }

    for (size_t pi = 0; pi < pool.size(); ++pi) {
        const auto& [a, b] = pool[pi];
        SeqCache phi(FamilyParams(Kind::Phi, a, b));
        SeqCache psi(FamilyParams(Kind::Psi, a, b));
        for (long j = 0; j <= jmax; ++j) {
            std::string base = pad(static_cast<long>(pi)) + ":j=" + pad(j) + ":";
            std::string in = params_str(a, b) + " j=" + std::to_string(j);
            run_case(suite, base + "phi-power", in, [&] {
                bool ok = phi_power_form(a, b, j) == phi.at(j);
                ok ? suite.pass(base + "phi-power", in, "power form == recurrence")
                   : suite.fail(base + "phi-power", in, "power form == recurrence", "mismatch");
            });
            run_case(suite, base + "psi-power", in, [&] {
                bool ok = psi_power_form(a, b, j) == psi.at(j);
                ok ? suite.pass(base + "psi-power", in, "power form == recurrence")
                   : suite.fail(base + "psi-power", in, "power form == recurrence", "mismatch");
            });
            auto roundtrip = [&](const char* op, const Expansion& e, SeqCache& cache) {
                Poly acc;
                for (const auto& term : e.terms)
                    acc += cache.at(e.degree - 2 * term.m).scaled(term.coeff);
                Poly diff = acc - Poly::monomial(static_cast<int>(j), Rational(1));
                diff.is_zero() ? suite.pass(base + op, in, "x^j reproduced")
                               : suite.fail(base + op, in, "x^j reproduced", diff.str());
            };
            run_case(suite, base + "invert-phi", in,
                     [&] { roundtrip("invert-phi", invert_phi(a, b, j), phi); });
            run_case(suite, base + "invert-psi", in,
                     [&] { roundtrip("invert-psi", invert_psi(a, b, j), psi); });
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_hyp_closed_forms(long imax) {
    SuiteReport suite{"hypergeometric-closed-forms"};
    for (long i = 0; i <= imax; ++i) {
        for (long m = 0; 2 * m <= i; ++m) {
            std::string in = "i=" + std::to_string(i) + " m=" + std::to_string(m);
            std::string key = "chu:" + pad(i) + ":" + pad(m);
            run_case(suite, key, in, [&] {
                Rational lhs = eval_2f1_terminating({m, Rational(m - i), Rational(-i), Rational(1)});
                bool ok = lhs == chu_vandermonde(m, i) && lhs * Rational(binomial(i, m)) == 1;
                ok ? suite.pass(key, in, "2F1(-m,m-i;-i;1) = 1/C(i,m)")
                   : suite.fail(key, in, "1/C(i,m)", to_string(lhs));
            });
            if (i >= 1) {
                std::string key2 = "unity-psi:" + pad(i) + ":" + pad(m);
                run_case(suite, key2, in, [&] {
                    Rational lhs =
                        eval_2f1_terminating({m, Rational(i - m), Rational(i - 2 * m + 2), Rational(1)});
                    Rational rhs = eval_2f1_at_unity_psi(m, i);
                    lhs == rhs ? suite.pass(key2, in, to_string(rhs))
                               : suite.fail(key2, in, to_string(rhs), to_string(lhs));
                });
            }
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_coefficient_recurrence(long imax, long tuples, std::uint64_t seed) {
    SuiteReport suite{"coefficient-recurrence"};
    Rng rng(seed);
    for (long t = 0; t < tuples; ++t) {
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        Rational r = rng.rational(9, 4), s = rng.rational(9, 4);
        std::string in = params_str(a, b) + params_str(r, s);
        for (long i = 2; i <= imax; ++i) {
            for (long m = 1; 2 * m <= i - 1; ++m) {
                std::string key = pad(t) + ":i=" + pad(i) + ":m=" + pad(m);
                run_case(suite, key, in, [&] {
                    Rational lhs = r * psi_in_phi_coefficient(m, i - 1, a, b, r, s) -
                                   r * b * psi_in_phi_coefficient(m - 1, i - 1, a, b, r, s) +
                                   a * s * psi_in_phi_coefficient(m - 1, i - 2, a, b, r, s);
                    Rational rhs = a * psi_in_phi_coefficient(m, i, a, b, r, s);
                    lhs == rhs ? suite.pass(key, in, "recurrence residual 0")
                               : suite.fail(key, in, "0", to_string(lhs - rhs));
                });
            }
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_connect(long imax, long random_pairs, std::uint64_t seed, bool corrupt) {
    SuiteReport suite{"connection-formulas"};
    Rng rng(seed);
    const auto& pool = table_param_pool();
    std::vector<std::array<Rational, 4>> pairs;
    for (const auto& [a, b] : pool)
        for (const auto& [r, s] : pool) pairs.push_back({a, b, r, s});
    for (long t = 0; t < random_pairs; ++t)
        pairs.push_back({rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4),
                         rng.rational(9, 4)});

    struct Route {
        const char* name;
        Expansion (*make)(const Rational&, const Rational&, const Rational&, const Rational&, long);
        Kind source, target;
    };
    const Route routes[] = {
        {"phi-to-psi", &connect_phi_to_psi, Kind::Phi, Kind::Psi},
        {"psi-to-phi", &connect_psi_to_phi, Kind::Psi, Kind::Phi},
        {"phi-to-phi", &connect_phi_to_phi, Kind::Phi, Kind::Phi},
        {"psi-to-psi", &connect_psi_to_psi, Kind::Psi, Kind::Psi},
    };

    bool corrupted_once = false;
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& [a, b, r, s] = pairs[pi];
        for (const auto& route : routes) {
            SeqCache source_cache(FamilyParams(route.source, a, b));
            SeqCache target_cache(FamilyParams(route.target, r, s));
            for (long i = 0; i <= imax; ++i) {
                std::string key =
                    std::string(route.name) + ":" + pad(static_cast<long>(pi)) + ":i=" + pad(i);
                std::string in = params_str(a, b) + "->" + params_str(r, s) + " i=" +
                                 std::to_string(i);
                run_case(suite, key, in, [&] {
                    Expansion e = route.make(a, b, r, s, i);
                    if (corrupt && !corrupted_once && pi == pairs.size() - 1 && i == imax) {
                        e.terms[0].coeff += 1;
                        corrupted_once = true;
                    }
                    Poly acc;
                    for (const auto& term : e.terms)
                        acc += target_cache.at(e.degree - 2 * term.m).scaled(term.coeff);
                    Poly diff = acc - source_cache.at(i);
                    diff.is_zero() ? suite.pass(key, in, "zero difference polynomial")
                                   : suite.fail(key, in, "zero difference polynomial", diff.str());
                });
            }
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_numbers(long summable_imax, long cross_imax) {
    SuiteReport suite{"number-identities"};
    for (const auto& c : number_identity_suite(summable_imax)) {
        std::string key = "summable:" + pad(c.i) + ":" + c.identity;
        c.pass ? suite.pass(key, "i=" + std::to_string(c.i) + " " + c.identity,
                            c.lhs.str())
               : suite.fail(key, "i=" + std::to_string(c.i) + " " + c.identity, c.lhs.str(),
                            to_string(c.rhs));
    }
    const NumberTag tags[] = {NumberTag::Fibonacci, NumberTag::Pell,      NumberTag::Fermat,
                              NumberTag::Lucas,     NumberTag::PellLucas, NumberTag::FermatLucas};
    for (NumberTag from : tags) {
        for (NumberTag to : tags) {
            if (from == to) continue;
            for (long i = 0; i <= cross_imax; ++i) {
                std::string key = "cross:" + number_tag_name(from) + "->" + number_tag_name(to) +
                                  ":" + pad(i);
                std::string in = number_tag_name(from) + "->" + number_tag_name(to) +
                                 " i=" + std::to_string(i);
                run_case(suite, key, in, [&] {
                    auto identity = cross_family_number(i, from, to);
                    identity.pass
                        ? suite.pass(key, in, identity.lhs.str())
                        : suite.fail(key, in, identity.lhs.str(), to_string(identity.rhs));
                });
            }
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_integrals(long imax, double quad_tol) {
    SuiteReport suite{"weighted-integrals"};
    const std::vector<std::pair<Rational, Rational>> params = {
        {Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(3), Rational(-2)}};
    for (size_t pi = 0; pi < params.size(); ++pi) {
        const auto& [a, b] = params[pi];
        for (long i = 0; i <= imax; ++i) {
            for (long j = 0; j <= imax; ++j) {
                std::string suffix = pad(static_cast<long>(pi)) + ":i=" + pad(i) + ":j=" + pad(j);
                std::string in = params_str(a, b) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j);
                run_case(suite, "phiT:" + suffix, in, [&] {
                    PiMultiple closed = integral_phi_T(a, b, i, j);
                    PiMultiple oracle = integral_phi_T_via_connection(a, b, i, j);
                    bool parity_ok = (i + j) % 2 == 0 || closed.coeff == 0;
                    closed == oracle && parity_ok
                        ? suite.pass("phiT:" + suffix, in, to_string(oracle.coeff) + "*pi")
                        : suite.fail("phiT:" + suffix, in, to_string(oracle.coeff) + "*pi",
                                     to_string(closed.coeff) + "*pi");
                });
                run_case(suite, "phiT-quad:" + suffix, in, [&] {
                    double res = quadrature_check(WeightedIntegral::PhiT, a, b, i, j, i + j + 2);
                    std::fabs(res) < quad_tol
                        ? suite.pass("phiT-quad:" + suffix, in, "|residual| < " + fmt_double(quad_tol))
                        : suite.fail("phiT-quad:" + suffix, in, "|residual| < " + fmt_double(quad_tol),
                                     fmt_double(res));
                });
                if (i >= 1) {
                    run_case(suite, "psiU:" + suffix, in, [&] {
                        PiMultiple closed = integral_psi_U(a, b, i, j);
                        PiMultiple oracle = integral_psi_U_via_connection(a, b, i, j);
                        bool parity_ok = (i + j) % 2 == 0 || closed.coeff == 0;
                        closed == oracle && parity_ok
                            ? suite.pass("psiU:" + suffix, in, to_string(oracle.coeff) + "*pi")
                            : suite.fail("psiU:" + suffix, in, to_string(oracle.coeff) + "*pi",
                                         to_string(closed.coeff) + "*pi");
                    });
                    run_case(suite, "psiU-quad:" + suffix, in, [&] {
                        double res = quadrature_check(WeightedIntegral::PsiU, a, b, i, j, i + j + 2);
                        std::fabs(res) < quad_tol
                            ? suite.pass("psiU-quad:" + suffix, in,
                                         "|residual| < " + fmt_double(quad_tol))
                            : suite.fail("psiU-quad:" + suffix, in,
                                         "|residual| < " + fmt_double(quad_tol), fmt_double(res));
                    });
                }
            }
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_square_composition(long kmax, long jmax, long trials, std::uint64_t seed) {
    SuiteReport suite{"square-composition-identities"};
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
        Rational x = rng.rational(9, 4); // nonzero by construction
        std::string in = params_str(a, b) + " x=" + to_string(x);
        for (long k = 1; k <= kmax; ++k) {
            std::string key = "square:" + pad(t) + ":k=" + pad(k);
            run_case(suite, key, in, [&] {
                Rational res = square_identity_residual(a, b, x, k);
                res == 0 ? suite.pass(key, in, "0")
                         : suite.fail(key, in, "0", to_string(res));
            });
        }
        for (long j = 1; j <= jmax; ++j) {
            std::string key = "composition:" + pad(t) + ":j=" + pad(j);
            run_case(suite, key, in, [&] {
                psi_composition_eval(a, b, j, x); // throws if the two sides disagree
                suite.pass(key, in, "both sides equal");
            });
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_radical_pairs(long kmax) {
    SuiteReport suite{"radical-pairs"};
    const auto& pool = table_param_pool();
    std::vector<Rational> xs;
    for (long n = -6; n <= 6; ++n)
        for (long dnm = 1; dnm <= 2; ++dnm) {
            Rational x(n, dnm);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
    for (size_t pi = 0; pi < pool.size(); ++pi) {
        const auto& [a, b] = pool[pi];
        for (size_t xi = 0; xi < xs.size(); ++xi) {
            const Rational& x = xs[xi];
            std::string in = params_str(a, b) + " x=" + to_string(x);
            if (a * a * x * x + 4 * b < 0) {
                suite.add({"domain:" + pad(static_cast<long>(pi)) + ":" +
                               pad(static_cast<long>(xi)),
                           in, "(a x)^2 >= -4 b", "outside the real-root domain",
                           CaseStatus::Skipped});
                continue;
            }
            for (long k = 1; k <= kmax; ++k) {
                std::string key = (k % 2 ? "odd:" : "even:") + pad(static_cast<long>(pi)) + ":" +
                                  pad(static_cast<long>(xi)) + ":k=" + pad(k);
                run_case(suite, key, in, [&] {
                    if (k % 2 == 1) {
                        RadicalPair p = odd_radical_pair(a, b, x, k);
                        bool ok = p.sum == Surd::from_rational(a * x) &&
                                  p.diff == Surd::sqrt_of(a * a * x * x + 4 * b);
                        ok ? suite.pass(key, in, "sum = a x, diff = sqrt(a^2 x^2 + 4b)")
                           : suite.fail(key, in, "sum = a x, diff = sqrt(a^2 x^2 + 4b)",
                                        p.sum.str() + " / " + p.diff.str());
                    } else {
                        RadicalPair p = even_radical_pair(a, b, x, k);
                        Surd expect_diff = b > 0 ? Surd::from_rational(abs(a * x))
                                                 : Surd::sqrt_of(a * a * x * x + 4 * b);
                        Surd expect_sum = b > 0 ? Surd::sqrt_of(a * a * x * x + 4 * b)
                                                : Surd::from_rational(abs(a * x));
                        bool ok = p.diff == expect_diff && p.sum == expect_sum;
                        ok ? suite.pass(key, in, "diff/sum per sign of b")
                           : suite.fail(key, in, expect_diff.str() + " / " + expect_sum.str(),
                                        p.diff.str() + " / " + p.sum.str());
                    }
                });
            }
        }
    }
    // unit radicals at x = 1/a (b >= -1/4)
    for (size_t pi = 0; pi < pool.size(); ++pi) {
        const auto& [a, b] = pool[pi];
        if (b < Rational(-1, 4)) continue;
        for (long k = 1; k <= kmax; k += 2) {
            std::string key = "unit:" + pad(static_cast<long>(pi)) + ":k=" + pad(k);
            std::string in = params_str(a, b) + " x=1/a";
            run_case(suite, key, in, [&] {
                RadicalPair p = odd_radical_pair(a, b, 1 / a, k);
                p.sum == Surd::from_rational(Rational(1))
                    ? suite.pass(key, in, "unit radical sum 1")
                    : suite.fail(key, in, "1", p.sum.str());
            });
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_composed_radicals(long jmax, long trials, std::uint64_t seed) {
    SuiteReport suite{"composed-radicals"};
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        Rational a = rng.rational(9, 3), b = rng.rational(9, 3);
        Rational x = rng.rational(9, 3);
        std::string in = params_str(a, b) + " x=" + to_string(x);
        for (long j = 1; j <= jmax; ++j) {
            std::string key = (j % 2 ? "odd:" : "even:") + pad(t) + ":j=" + pad(j);
            run_case(suite, key, in, [&] {
                ComposedRadical r = j % 2 == 1 ? composed_odd_radical(a, b, j, x)
                                               : composed_even_radical(a, b, j, x);
                rat_pow(r.value, j) == r.radicand
                    ? suite.pass(key, in, "value^j == radicand")
                    : suite.fail(key, in, "value^j == radicand", to_string(r.value));
            });
        }
    }
    suite.finish();
    return suite;
}

SuiteReport suite_worked_examples() {
    SuiteReport suite{"golden-radicals"};

    struct OddCase {
        const char* key;
        long a, b, x, k;
        Rational sum;                 // expected a x
        const char* radicand_literal; // published form, via Surd::str()
    };
    const OddCase odd_cases[] = {
        {"golden-odd-L3", 1, 1, 2, 3, Rational(2), "7 + 5*sqrt(2)"},
        {"golden-odd-Q3", 2, 1, 3, 3, Rational(6), "117 + 37*sqrt(10)"},
        {"golden-odd-f5", 3, -2, 4, 5, Rational(12), "115896 + 19876*sqrt(34)"},
        {"golden-odd-T5", 2, -1, 5, 5, Rational(10), "47525 + 19402*sqrt(6)"},
    };
    for (const auto& c : odd_cases) {
        std::string in = "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                         std::to_string(c.x) + ") k=" + std::to_string(c.k);
        run_case(suite, c.key, in, [&] {
            RadicalPair p = odd_radical_pair(Rational(c.a), Rational(c.b), Rational(c.x), c.k);
            bool ok = p.sum == Surd::from_rational(c.sum) &&
                      p.radicand_plus.str() == c.radicand_literal;
            ok ? suite.pass(c.key, in, "sum " + to_string(c.sum) + ", radicand " + c.radicand_literal)
               : suite.fail(c.key, in, std::string(c.radicand_literal) + " -> " + to_string(c.sum),
                            p.radicand_plus.str() + " -> " + p.sum.str());
        });
    }
    // the difference form of the same L3 radical
    run_case(suite, "golden-odd-L3-diff", "(1,1,2) k=3", [&] {
        RadicalPair p = odd_radical_pair(Rational(1), Rational(1), Rational(2), 3);
        p.diff == Surd(Rational(0), Rational(2), Rational(2))
            ? suite.pass("golden-odd-L3-diff", "(1,1,2) k=3", "2*sqrt(2)")
            : suite.fail("golden-odd-L3-diff", "(1,1,2) k=3", "2*sqrt(2)", p.diff.str());
    });

    struct EvenCase {
        const char* key;
        long a, b, x, k;
        Rational result; // |a x| -- diff for b > 0, sum for b < 0
        const char* radicand_literal;
    };
    const EvenCase even_cases[] = {
        {"golden-even-L4", 1, 1, 2, 4, Rational(2), "17 + 12*sqrt(2)"},
        {"golden-even-Q4", 2, 1, 5, 4, Rational(10), "5201 + 1020*sqrt(26)"},
        {"golden-even-f6", 3, -2, 7, 6, Rational(21), "83448209/2 + 4010265/2*sqrt(433)"},
        {"golden-even-T8", 2, -1, 7, 8, Rational(14), "708158977 + 408855776*sqrt(3)"},
    };
    for (const auto& c : even_cases) {
        std::string in = "(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                         std::to_string(c.x) + ") k=" + std::to_string(c.k);
        run_case(suite, c.key, in, [&] {
            RadicalPair p = even_radical_pair(Rational(c.a), Rational(c.b), Rational(c.x), c.k);
            const Surd& got = c.b > 0 ? p.diff : p.sum;
            bool ok = got == Surd::from_rational(c.result) &&
                      p.radicand_plus.str() == c.radicand_literal;
            ok ? suite.pass(c.key, in,
                            "value " + to_string(c.result) + ", radicand " + c.radicand_literal)
               : suite.fail(c.key, in, std::string(c.radicand_literal) + " -> " + to_string(c.result),
                            p.radicand_plus.str() + " -> " + got.str());
        });
    }

    // composed odd radical at j = 5, (a,b) = (3,-2), x = -1/3
    run_case(suite, "golden-composed-f5", "(3,-2) j=5 x=-1/3", [&] {
        ComposedRadical r = composed_odd_radical(Rational(3), Rational(-2), 5, Rational(-1, 3));
        bool ok = r.value == Rational(-1, 3) && r.half_psi == Rational(-1889569, 486) &&
                  r.half_psi * r.half_psi + rat_pow(Rational(-2), 5) ==
                      Rational(Integer("3570463447489"), Integer(236196));
        ok ? suite.pass("golden-composed-f5", "(3,-2) j=5 x=-1/3", "-1/3")
           : suite.fail("golden-composed-f5", "(3,-2) j=5 x=-1/3", "-1/3", to_string(r.value));
    });

    // the Ramanujan 110 radical: j = 6, (a,b) = (1,-1), x = 110
    run_case(suite, "golden-ramanujan-110", "(1,-1) j=6 x=110", [&] {
        ComposedRadical r = composed_even_radical(Rational(1), Rational(-1), 6, Rational(110));
        Rational c(Integer(146410001), Integer(48400));
        Rational dedication = 32 * rat_pow(c, 3) - 6 * c; // the birthday-dedication constant
        bool ok = r.value == Rational(110) && r.half_psi == dedication &&
                  r.radicand == rat_pow(Rational(110), 6);
        ok ? suite.pass("golden-ramanujan-110", "(1,-1) j=6 x=110", "110")
           : suite.fail("golden-ramanujan-110", "(1,-1) j=6 x=110", "110", to_string(r.value));
    });

    // denest goldens
    run_case(suite, "denest-golden-cbrt", "k=3 7+5*sqrt(2)", [&] {
        DenestResult r = denest(NestedRadical(3, Rational(7), Rational(5), Rational(2)));
        bool ok = r.status == DenestStatus::Denested && r.value &&
                  *r.value == Surd(Rational(1), Rational(1), Rational(2));
        ok ? suite.pass("denest-golden-cbrt", "k=3 7+5*sqrt(2)", "1 + sqrt(2)")
           : suite.fail("denest-golden-cbrt", "k=3 7+5*sqrt(2)", "1 + sqrt(2)",
                        r.value ? r.value->str() : "NotRecognized");
    });
    run_case(suite, "denest-golden-4th", "k=4 17+12*sqrt(2)", [&] {
        DenestResult r = denest(NestedRadical(4, Rational(17), Rational(12), Rational(2)));
        bool ok = r.status == DenestStatus::Denested && r.value &&
                  *r.value == Surd(Rational(1), Rational(1), Rational(2));
        ok ? suite.pass("denest-golden-4th", "k=4 17+12*sqrt(2)", "1 + sqrt(2)")
           : suite.fail("denest-golden-4th", "k=4 17+12*sqrt(2)", "1 + sqrt(2)",
                        r.value ? r.value->str() : "NotRecognized");
    });
    run_case(suite, "denest-unknown", "k=3 1+sqrt(7919)", [&] {
        DenestResult r = denest(NestedRadical(3, Rational(1), Rational(1), Rational(7919)));
        r.status == DenestStatus::NotRecognized
            ? suite.pass("denest-unknown", "k=3 1+sqrt(7919)", "NotRecognized")
            : suite.fail("denest-unknown", "k=3 1+sqrt(7919)", "NotRecognized", r.value->str());
    });

    suite.finish();
    return suite;
}

SuiteReport suite_trig_identity(long imax, long samples, std::uint64_t seed, double tol) {
    SuiteReport suite{"trig-identity"};
    Rng rng(seed);
    std::vector<double> thetas;
    thetas.reserve(static_cast<size_t>(samples));
    for (long t = 0; t < samples; ++t)
        thetas.push_back(static_cast<double>(rng.next() >> 11) /
                         static_cast<double>(1ULL << 53) * 2.0 * std::numbers::pi);
    for (long i = 0; i <= imax; ++i) {
        std::string key = "i=" + pad(i);
        std::string in = "i=" + std::to_string(i) + " samples=" + std::to_string(samples);
        run_case(suite, key, in, [&] {
            double res = trig_identity_check(i, thetas);
            res < tol ? suite.pass(key, in, "max residual < " + fmt_double(tol))
                      : suite.fail(key, in, "max residual < " + fmt_double(tol), fmt_double(res));
        });
    }
    suite.finish();
    return suite;
}

SuiteReport suite_denest_roundtrip(long kmax) {
    SuiteReport suite{"denest-roundtrip"};
    const std::vector<std::pair<Rational, Rational>> families = {
        {Rational(1), Rational(1)},  {Rational(2), Rational(1)}, {Rational(3), Rational(-2)},
        {Rational(2), Rational(-1)}, {Rational(1), Rational(-1)}};
    std::vector<Rational> xs;
    for (long dnm = 1; dnm <= 3; ++dnm)
        for (long nmr = -5 * dnm; nmr <= 5 * dnm; ++nmr) {
            Rational x(nmr, dnm);
            if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
        }
    for (size_t fi = 0; fi < families.size(); ++fi) {
        const auto& [a, b] = families[fi];
        for (size_t xi = 0; xi < xs.size(); ++xi) {
            const Rational& x = xs[xi];
            std::string in = params_str(a, b) + " x=" + to_string(x);
            if (a * a * x * x + 4 * b < 0) {
                suite.add({"domain:" + pad(static_cast<long>(fi), 1) + ":" +
                               pad(static_cast<long>(xi)),
                           in, "(a x)^2 >= -4 b", "outside the real-root domain",
                           CaseStatus::Skipped});
                continue;
            }
            for (long k = 1; k <= kmax; ++k) {
                std::string key = pad(static_cast<long>(fi), 1) + ":" +
                                  pad(static_cast<long>(xi)) + ":k=" + pad(k);
                run_case(suite, key, in, [&] {
                    RadicalPair p = k % 2 == 1 ? odd_radical_pair(a, b, x, k)
                                               : even_radical_pair(a, b, x, k);
                    Rational u = p.radicand_plus.rational_part();
                    Rational v = p.radicand_plus.surd_part();
                    Rational d = p.radicand_plus.radicand();
                    DenestResult r = denest(NestedRadical(k, u, v, d));
                    bool ok = r.status == DenestStatus::Denested && r.value &&
                              *r.value == p.root_plus &&
                              r.value->pow(static_cast<unsigned long>(k)) == p.radicand_plus;
                    ok ? suite.pass(key, in, "recovered " + p.root_plus.str())
                       : suite.fail(key, in, "recovered " + p.root_plus.str(),
                                    r.value ? r.value->str() : "NotRecognized");
                });
            }
        }
    }
    suite.finish();
    return suite;
}

Report run_verify_all(const VerifyOptions& opts) {
    if (opts.imax < 2) throw std::invalid_argument("verify-all: need imax >= 2");
    long imax = opts.imax;
    Rng seeder(opts.seed);
    std::uint64_t s1 = seeder.next(), s2 = seeder.next(), s3 = seeder.next(),
                  s4 = seeder.next(), s5 = seeder.next(), s6 = seeder.next();

    Report report;
    report.options = opts;
    report.suites.push_back(suite_power_inversion(4 * imax, s1));
    report.suites.push_back(suite_hyp_closed_forms(3 * imax));
    report.suites.push_back(suite_coefficient_recurrence(2 * imax, 10, s2));
    report.suites.push_back(suite_connect(2 * imax + 5, 20, s3, opts.corrupt));
    report.suites.push_back(suite_numbers(20 * imax, 2 * imax + 5));
    report.suites.push_back(suite_integrals(2 * imax));
    report.suites.push_back(suite_square_composition(3 * imax, 2 * imax, 5 * imax, s4));
    report.suites.push_back(suite_radical_pairs(imax + 5));
    report.suites.push_back(suite_composed_radicals(2 * imax, 3 * imax, s5));
    report.suites.push_back(suite_worked_examples());
    report.suites.push_back(suite_trig_identity(imax, 10 * imax, s6));
    report.suites.push_back(suite_denest_roundtrip(std::min<long>(8, imax)));

    std::sort(report.suites.begin(), report.suites.end(),
              [](const SuiteReport& a, const SuiteReport& b) { return a.name < b.name; });
    for (const auto& s : report.suites) {
        report.passed += s.passed;
        report.failed += s.failed;
        report.skipped += s.skipped;
    }
    return report;
}

std::string Report::to_json(int indent, bool include_cases) const {
    nlohmann::json j;
    j["options"] = {{"imax", options.imax},
                    {"seed", options.seed},
                    {"corrupt", options.corrupt}};
    j["suites"] = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json js;
        js["name"] = s.name;
        js["summary"] = {{"pass", s.passed}, {"fail", s.failed}, {"skipped", s.skipped}};
        if (include_cases) {
            js["cases"] = nlohmann::json::array();
            for (const auto& c : s.cases) {
                js["cases"].push_back({{"key", c.key},
                                       {"inputs", c.inputs},
                                       {"expected", c.expected},
                                       {"got", c.got},
                                       {"status", c.status == CaseStatus::Pass     ? "pass"
                                                  : c.status == CaseStatus::Fail   ? "fail"
                                                                                   : "skipped"}});
            }
        }
        j["suites"].push_back(std::move(js));
    }
    j["summary"] = {{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
    return j.dump(indent);
}

std::string Report::summary_text() const {
    std::ostringstream os;
    os << "verify-all  imax=" << options.imax << "  seed=" << options.seed
       << (options.corrupt ? "  [corrupt]" : "") << "\n";
    for (const auto& s : suites) {
        os << (s.failed == 0 ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.passed << " passed";
        if (s.failed) os << ", " << s.failed << " failed";
        if (s.skipped) os << ", " << s.skipped << " skipped";
        os << ")\n";
        for (const auto& c : s.cases)
            if (c.status == CaseStatus::Fail)
                os << "      failed " << c.key << " [" << c.inputs << "] expected " << c.expected
                   << ", got " << c.got << "\n";
    }
    os << "total: " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return os.str();
}

} // namespace fiblucas
