#include "doctest.h"

#include <algorithm>
#include <set>

#include "fdcalc/serialization.hpp"
#include "fdcalc/verify.hpp"

using namespace fdcalc;

TEST_CASE("unknown suite ids are rejected") {
    CHECK_THROWS_AS(run_suite("no_such_suite"), std::invalid_argument);
}

TEST_CASE("suites are deterministic under a fixed seed") {
    VerifyBudget budget;
    budget.max_group_order = 8;
    budget.corpus_size = 40;
    budget.seed = 123;
    for (const char* name : {"lemma_0_0", "subadditivity", "oracle_agreement"}) {
        SuiteReport r1 = run_suite(name, budget);
        SuiteReport r2 = run_suite(name, budget);
        CHECK(r1.suite == r2.suite);
        CHECK(r1.cases_run == r2.cases_run);
        CHECK(r1.failures == r2.failures);
    }
}

TEST_CASE("fast suites pass on a reduced budget") {
    VerifyBudget budget;
    budget.max_group_order = 8;
    budget.max_beta = 2;
    budget.corpus_size = 30;
    for (const std::string& name : suite_names()) {
        SuiteReport r = run_suite(name, budget);
        INFO(name, ": ", r.failures.empty() ? "" : r.failures.front().citation, " / ",
             r.failures.empty() ? "" : r.failures.front().inputs);
        CHECK(r.passed());
        CHECK(r.cases_run > 0);
    }
}

TEST_CASE("scan and closed form agree for all p-groups up to order 16") {
    VerifyBudget budget;
    budget.max_group_order = 16;
    budget.max_beta = 3;
    SuiteReport r = run_suite("delta_vs_nu", budget);
    INFO((r.failures.empty() ? std::string() : r.failures.front().inputs));
    CHECK(r.passed());
    CHECK(r.cases_run >= 100);
}

TEST_CASE("coverage manifest touches every cross-validated operation") {
    // Operations whose behavior is pinned by external results rather than
    // plumbing; each must be exercised by at least one suite.
    const std::set<std::string> required{
        "structure_stats", "primary_component",   "hom_is_trivial",
        "augmentation",    "delta_elem",          "act",
        "ideal_power_is_zero", "nilpotency_index",
        "make_delta",      "difference",          "iterated_difference_binomial",
        "fdeg",            "fdeg_bruteforce",     "diagonal_join",
        "pointwise_add",   "compose_pre",         "compose_post",
        "weisman_M",       "weisman_threshold",   "delta_cyclic",
        "wilson_check",    "sum_theorem_max",     "delta_sup",
        "delta_circ",      "degree_set",          "predicted_nu",
    };
    std::set<std::string> covered;
    for (const auto& [suite, ops] : suite_coverage())
        covered.insert(ops.begin(), ops.end());
    for (const std::string& op : required) {
        INFO("operation not covered by any suite: ", op);
        CHECK(covered.count(op) == 1);
    }
}

TEST_CASE("suite names are unique and run_all respects their order") {
    auto names = suite_names();
    std::set<std::string> unique(names.begin(), names.end());
    CHECK(unique.size() == names.size());
    CHECK(names.size() == suite_coverage().size());
}

TEST_CASE("suite reports round trip through JSON") {
    SuiteReport r;
    r.suite = "demo";
    r.cases_run = 3;
    r.failures.push_back(SuiteFailure{"A=Z2", "0", "1", "some law"});
    r.wall_time_ms = 1.25;
    CHECK(suite_report_from_json(to_json(r)) == r);

    VerifyBudget budget;
    budget.max_group_order = 6;
    budget.corpus_size = 10;
    SuiteReport live = run_suite("weisman", budget);
    CHECK(suite_report_from_json(to_json(live)) == live);
}
