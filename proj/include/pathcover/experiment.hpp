#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcover/analytics.hpp"
#include "pathcover/classify.hpp"

namespace pathcover {

struct ExperimentConfig {
    long long n = 1000;
    std::vector<double> c_values = {6.0};
    int trials = 1;
    uint64_t master_seed = 1;

    // Threshold overrides; unset fields fall back to the defaults for c.
    std::optional<int> small_deg;
    std::optional<int> large_deg;
    std::optional<int> close_radius;

    std::optional<int> gamma_cap;            // default max(3, floor(c/1000))
    std::optional<long long> booster_budget; // default |V(G*)|
    int retries = 3;                         // fresh gamma0 seeds after failure
    bool run_oracle = false;                 // exact cover number when n <= 16
    std::vector<std::string> checks;         // subset of {"properties", "sizes"}
    double check_slack = 10.0;
    double epsilon = 0.5;

    std::string out_dir;        // empty: no files written
    std::string format = "csv"; // "csv" or "json" (reports always include both
                                // files when out_dir is set; format selects stdout)
    int threads = 0;            // 0 = hardware concurrency
    bool include_timings = false; // timings vary run to run; opt-in only

    void validate() const; // throws std::invalid_argument
    int total_trials() const { return static_cast<int>(c_values.size()) * trials; }
};

struct TrialReport {
    double c = 0.0;
    int trial_index = 0; // flat index across the c grid
    uint64_t seed = 0;
    long long n = 0;

    long long v0 = 0, v1 = 0, small = 0, large = 0, close = 0, bad = 0;
    long long c2 = 0, gstar_n = 0, m_size = 0;
    long long boosters = 0;
    int retries_used = 0;
    bool hamilton_success = false;
    bool cover_valid = false;
    bool success = false; // hamilton_success && cover_valid
    std::string failure_reason;

    long long cover_size = 0;
    long long lower_bound = 0;
    double target = 0.0;
    double ratio_lower = 0.0;
    double ratio_target = 0.0;
    long long exact = -1; // -1: oracle not run

    bool checks_pass = true; // enabled property/size checks only
    int gstar_floor_violations = 0;
    int matching_dropped = 0;

    double ms_sample = 0.0, ms_classify = 0.0, ms_reduce = 0.0, ms_gamma = 0.0,
           ms_hamilton = 0.0, ms_cover = 0.0;
};

// Runs the full pipeline for one flat trial index:
// sample -> classify -> reduce -> gamma0 -> hamilton (with retries) ->
// extract -> verify -> gap report. Never throws for in-pipeline failures;
// those are recorded in the report. The per-trial seed is derived from
// (master_seed, trial_index) only, so scheduling cannot affect results.
TrialReport run_trial(const ExperimentConfig& config, int trial_index);

struct ExperimentSummary {
    std::vector<TrialReport> trials;
    std::vector<QuantityStats> stats; // grouped per c value
    bool all_checks_pass = true;
};

// All trials (in parallel across a worker pool), aggregated; writes
// trials.csv, summary.csv and report.json under out_dir when set. Throws
// on an unwritable output path before any trial runs.
ExperimentSummary run_experiment(const ExperimentConfig& config);

std::string trials_to_csv(const std::vector<TrialReport>& trials, bool include_timings);
std::string summary_to_csv(const std::vector<QuantityStats>& stats);
std::string experiment_to_json(const ExperimentConfig& config, const ExperimentSummary& summary);

} // namespace pathcover
