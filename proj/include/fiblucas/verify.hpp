#pragma once

// Machine-checkable identity suites and the verify-all driver. Every
// suite returns a deterministic report (cases sorted by key); randomness
// is confined to the seeded parameter sampler so identical inputs and
// seed reproduce the report byte for byte.

#include "fiblucas/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fiblucas {

enum class CaseStatus { Pass, Fail, Skipped };

struct CaseResult {
    std::string key;
    std::string inputs;
    std::string expected;
    std::string got;
    CaseStatus status = CaseStatus::Fail;
};

struct SuiteReport {
    std::string name;
    std::vector<CaseResult> cases{};
    long passed = 0, failed = 0, skipped = 0;

    void add(CaseResult c);
    void pass(std::string key, std::string inputs, std::string expected);
    void fail(std::string key, std::string inputs, std::string expected, std::string got);
    void finish(); // sort cases by key
};

struct VerifyOptions {
    long imax = 10;
    std::uint64_t seed = 0;
    bool corrupt = false; // negative control: flips one connection coefficient
};

struct Report {
    VerifyOptions options;
    std::vector<SuiteReport> suites;
    long passed = 0, failed = 0, skipped = 0;
    bool all_pass() const { return failed == 0; }
    std::string to_json(int indent = 2, bool include_cases = true) const;
    std::string summary_text() const;
};

// splitmix64; platform-stable by construction
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    long range(long lo, long hi); // inclusive
    // nonzero rational with |num| <= max_num, 1 <= den <= max_den
    Rational rational(long max_num, long max_den, bool allow_negative = true);

private:
    std::uint64_t state_;
};

// distinct (a, b) values of the named families (Dickson alpha in {1, 2})
const std::vector<std::pair<Rational, Rational>>& table_param_pool();

SuiteReport suite_power_inversion(long jmax, std::uint64_t seed);
SuiteReport suite_hyp_closed_forms(long imax);
SuiteReport suite_coefficient_recurrence(long imax, long tuples, std::uint64_t seed);
SuiteReport suite_connect(long imax, long random_pairs, std::uint64_t seed, bool corrupt = false);
SuiteReport suite_numbers(long summable_imax, long cross_imax);
SuiteReport suite_integrals(long imax, double quad_tol = 1e-10);
SuiteReport suite_square_composition(long kmax, long jmax, long trials, std::uint64_t seed);
SuiteReport suite_radical_pairs(long kmax);
SuiteReport suite_composed_radicals(long jmax, long trials, std::uint64_t seed);
SuiteReport suite_worked_examples();
SuiteReport suite_trig_identity(long imax, long samples, std::uint64_t seed, double tol = 1e-10);
SuiteReport suite_denest_roundtrip(long kmax);

Report run_verify_all(const VerifyOptions& opts);

} // namespace fiblucas
