// Acceptance gate: every criterion runs at its stated grid and tolerance
// and prints one PASS/FAIL line. Exit code is the number of failures.

#include "fiblucas/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace fiblucas;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

std::string counts(const SuiteReport& s) {
    std::string out = std::to_string(s.passed) + " checks";
    if (s.failed) out += ", " + std::to_string(s.failed) + " FAILED";
    return out;
}

std::string first_failure(const SuiteReport& s) {
    for (const auto& c : s.cases)
        if (c.status == CaseStatus::Fail)
            return "; first failure " + c.key + " [" + c.inputs + "] expected " + c.expected +
                   " got " + c.got;
    return "";
}

} // namespace

int main() {
    constexpr std::uint64_t seed = 0;

    { // 1. golden radical set, < 1 s
        Timer t;
        SuiteReport s = suite_worked_examples();
        double dt = t.seconds();
        bool ok = s.failed == 0 && dt < 1.0;
        report(1, "golden radical set (2, 2*sqrt2, 6, 12, 10 | 2, 10, 21, 14 | -1/3 | 110)",
               ok, counts(s) + first_failure(s) + ", " + std::to_string(dt) + " s");
    }

    { // 2. connection exactness, i <= 25, named-family pairs + 20 random, < 30 s
        Timer t;
        SuiteReport s = suite_connect(25, 20, seed);
        double dt = t.seconds();
        bool ok = s.failed == 0 && dt < 30.0;
        report(2, "connection exactness, all four routes, i <= 25", ok,
               counts(s) + first_failure(s) + ", " + std::to_string(dt) + " s");
    }

    { // 3. power-form / inversion round-trips, j <= 40
        SuiteReport s = suite_power_inversion(40, seed);
        report(3, "power-form and inversion round-trips, j <= 40", s.failed == 0,
               counts(s) + first_failure(s));
    }

    { // 4. hypergeometric closed forms (i <= 30) and coefficient-recurrence residuals
        SuiteReport s = suite_hyp_closed_forms(30);
        SuiteReport l = suite_coefficient_recurrence(20, 10, seed);
        bool ok = s.failed == 0 && l.failed == 0;
        report(4, "2F1 closed forms i <= 30 and coefficient-recurrence residuals", ok,
               counts(s) + " / " + counts(l) + first_failure(s) + first_failure(l));
    }

    { // 5. number identities: summable set to i <= 200, 30 cross pairs to i <= 25
        SuiteReport s = suite_numbers(200, 25);
        report(5, "six summable number identities i <= 200, 30 cross-family pairs i <= 25",
               s.failed == 0, counts(s) + first_failure(s));
    }

    { // 6. integral closed forms vs orthogonality oracle, quadrature < 1e-10
        SuiteReport s = suite_integrals(20, 1e-10);
        report(6, "weighted-integral closed forms i <= 20, quadrature residual < 1e-10",
               s.failed == 0, counts(s) + first_failure(s));
    }

    { // 7. square identity (k <= 30) and composition identity (j <= 20), 50 random triples
        SuiteReport s = suite_square_composition(30, 20, 50, seed);
        report(7, "square-identity residual k <= 30, composition identity j <= 20, 50 triples",
               s.failed == 0, counts(s) + first_failure(s));
    }

    { // 8. Chebyshev trigonometric identity, i <= 10, 100 samples, < 1e-10
        SuiteReport s = suite_trig_identity(10, 100, seed, 1e-10);
        report(8, "Chebyshev trig identity max residual < 1e-10, i <= 10, 100 thetas",
               s.failed == 0, counts(s) + first_failure(s));
    }

    { // 9. denest round-trip on the (a,b,x,k) grid, k <= 8
        SuiteReport s = suite_denest_roundtrip(8);
        bool ok = s.failed == 0 && s.passed > 0;
        report(9, "denest 100% recovery on the named-family grid, |x| <= 5, den <= 3, k <= 8", ok,
               counts(s) + first_failure(s));
    }

    { // radical-pair surd sweeps back criteria 1 and 9; keep them green too
        SuiteReport s = suite_radical_pairs(15);
        SuiteReport c = suite_composed_radicals(20, 30, seed);
        bool ok = s.failed == 0 && c.failed == 0;
        report(0, "supporting surd-identity sweeps (radical pair and composition grids)", ok,
               counts(s) + " / " + counts(c) + first_failure(s) + first_failure(c));
    }

    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                failures);
    return failures;
}
