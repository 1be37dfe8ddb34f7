#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fdcalc {

/// Knobs for a verification run. Defaults match the acceptance scales.
struct VerifyBudget {
    std::uint64_t max_group_order = 12;
    std::uint32_t max_beta = 3;
    std::uint32_t corpus_size = 200;
    std::uint64_t seed = 0;

    friend bool operator==(const VerifyBudget&, const VerifyBudget&) = default;
};

struct SuiteFailure {
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string citation; // the violated law, stated as a formula

    friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t cases_run = 0;
    std::vector<SuiteFailure> failures;
    double wall_time_ms = 0.0;

    bool passed() const { return failures.empty(); }

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

/// All suite ids, in canonical execution order.
std::vector<std::string> suite_names();

/// Runs one suite. Deterministic given the budget (wall_time_ms aside).
/// Throws std::invalid_argument for an unknown suite id.
SuiteReport run_suite(std::string_view name, const VerifyBudget& budget = {});

std::vector<SuiteReport> run_all_suites(const VerifyBudget& budget = {});

/// Which public operations each suite exercises; lets tests assert that the
/// union of suites touches every operation that needs cross-validation.
std::vector<std::pair<std::string, std::vector<std::string>>> suite_coverage();

} // namespace fdcalc
