#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "borelred/instance_gen.hpp"
#include "borelred/json_io.hpp"

namespace borelred {

struct LawTally {
    long passed = 0;
    long failed = 0;
};

struct Counterexample {
    std::string law;
    int n = 0;
    std::uint64_t instance_seed = 0;
    Json detail;
};

/// Aggregated outcome of one suite run. Every law is evaluated exactly once
/// per trial, so passed + failed = trials for each law.
struct VerificationReport {
    std::string suite;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t seed = 0;
    long trials = 0;
    std::map<std::string, LawTally> laws;
    std::optional<Counterexample> counterexample;

    bool all_pass() const;
    Json to_json() const;
    std::string text() const;
};

struct SuiteOptions {
    int n_max = 6;
    long trials = 100;
    std::uint64_t seed = 0;
    int max_coeff = kDefaultMaxCoeff;
    /// When set, receives one JSON object per trial:
    /// {"n":..., "seed":..., "laws": {"<law>": "pass"|"fail", ...}}.
    std::function<void(const Json&)> per_trial_sink;
};

/// Suites runnable by name; "all" expands to every one of them.
const std::vector<std::string>& suite_names();

/// The laws a suite evaluates on every trial.
const std::vector<std::string>& suite_laws(const std::string& suite);

/// Runs one named suite (or all of them) over seeded instances and tallies
/// each law. Unknown names throw DomainError.
std::vector<VerificationReport> run_suites(const std::string& name, const SuiteOptions& opt);

/// Single-suite convenience wrapper; rejects "all".
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace borelred
