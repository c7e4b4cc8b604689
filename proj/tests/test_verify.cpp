#include "fiblucas/verify.hpp"

#include <doctest.h>

using namespace fiblucas;

TEST_CASE("rng is deterministic and platform-stable") {
    Rng a(0), b(0);
    for (int t = 0; t < 100; ++t) CHECK(a.next() == b.next());
    Rng c(0);
    CHECK(c.next() == 0xe220a8397b1dcdafULL); // splitmix64 reference value for seed 0
}

TEST_CASE("verify-all passes at a small grid") {
    Report r = run_verify_all({2, 0, false});
    INFO(r.summary_text());
    CHECK(r.all_pass());
    CHECK(r.failed == 0);
    CHECK(r.passed > 500);
    CHECK_THROWS_AS(run_verify_all({1, 0, false}), std::invalid_argument);
}

TEST_CASE("identical inputs and seed give byte-identical reports") {
    Report a = run_verify_all({2, 7, false});
    Report b = run_verify_all({2, 7, false});
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("corrupted build is caught (negative control)") {
    Report r = run_verify_all({2, 0, true});
    CHECK_FALSE(r.all_pass());
    CHECK(r.failed >= 1);
}

TEST_CASE("suite reports are sorted by case key") {
    SuiteReport s = suite_hyp_closed_forms(8);
    for (size_t i = 1; i < s.cases.size(); ++i) CHECK(s.cases[i - 1].key <= s.cases[i].key);
    CHECK(s.failed == 0);
    CHECK(static_cast<size_t>(s.passed + s.failed + s.skipped) == s.cases.size());
}
