#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "pathcover/experiment.hpp"

using namespace pathcover;

namespace {

ExperimentConfig tiny_config() {
    ExperimentConfig config;
    config.n = 40;
    config.c_values = {3.0};
    config.trials = 3;
    config.master_seed = 11;
    config.retries = 2;
    return config;
}

} // namespace

TEST_CASE("config validation") {
    ExperimentConfig config = tiny_config();
    CHECK_NOTHROW(config.validate());
    config.trials = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = tiny_config();
    config.c_values = {100.0};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = tiny_config();
    config.checks = {"bogus"};
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = tiny_config();
    config.run_oracle = true; // n too large for the oracle
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("run_trial is deterministic") {
    ExperimentConfig config = tiny_config();
    TrialReport a = run_trial(config, 1);
    TrialReport b = run_trial(config, 1);
    CHECK(trials_to_csv({a}, false) == trials_to_csv({b}, false));
    CHECK(a.seed == b.seed);
    CHECK(a.cover_size == b.cover_size);
    CHECK(a.boosters == b.boosters);

    TrialReport other = run_trial(config, 2);
    CHECK(other.seed != a.seed);
}

TEST_CASE("run_trial oracle comparison at n = 12") {
    ExperimentConfig config;
    config.n = 12;
    config.c_values = {3.0};
    config.trials = 8;
    config.master_seed = 5;
    config.run_oracle = true;
    for (int i = 0; i < config.total_trials(); ++i) {
        TrialReport report = run_trial(config, i);
        CHECK(report.cover_valid);
        REQUIRE(report.exact >= 0);
        CHECK(report.cover_size >= report.exact);
        CHECK(report.lower_bound <= report.exact);
    }
}

TEST_CASE("run_experiment serial and parallel agree byte for byte") {
    ExperimentConfig config;
    config.n = 60;
    config.c_values = {3.0, 5.0};
    config.trials = 4;
    config.master_seed = 123;

    config.threads = 1;
    ExperimentSummary serial = run_experiment(config);
    config.threads = 2;
    ExperimentSummary parallel = run_experiment(config);

    CHECK(trials_to_csv(serial.trials, false) == trials_to_csv(parallel.trials, false));
    CHECK(summary_to_csv(serial.stats) == summary_to_csv(parallel.stats));
    CHECK(experiment_to_json(config, serial) == experiment_to_json(config, parallel));
    CHECK(serial.trials.size() == 8);

    // Single trial: the summary echoes the trial.
    ExperimentConfig one = tiny_config();
    one.trials = 1;
    ExperimentSummary s1 = run_experiment(one);
    REQUIRE(s1.trials.size() == 1);
    for (const auto& st : s1.stats) {
        CHECK(st.count == 1);
        CHECK(st.stddev == 0.0);
        CHECK(st.min == st.max);
    }
}

TEST_CASE("run_experiment writes report files") {
    ExperimentConfig config = tiny_config();
    auto dir = std::filesystem::temp_directory_path() / "pathcover_test_out";
    std::filesystem::remove_all(dir);
    config.out_dir = dir.string();
    ExperimentSummary summary = run_experiment(config);
    CHECK(std::filesystem::exists(dir / "trials.csv"));
    CHECK(std::filesystem::exists(dir / "summary.csv"));
    CHECK(std::filesystem::exists(dir / "report.json"));

    std::ifstream in(dir / "trials.csv", std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == trials_to_csv(summary.trials, false));
    std::filesystem::remove_all(dir);

    ExperimentConfig bad = tiny_config();
    bad.out_dir = "/proc/definitely/not/writable";
    CHECK_THROWS_AS(run_experiment(bad), std::runtime_error);
}

TEST_CASE("trial reports carry the stage sizes") {
    ExperimentConfig config;
    config.n = 400;
    config.c_values = {6.0};
    config.trials = 1;
    config.master_seed = 9;
    TrialReport report = run_trial(config, 0);
    CHECK(report.n == 400);
    CHECK(report.v0 + report.v1 <= report.n);
    CHECK(report.c2 <= report.n);
    CHECK(report.gstar_n <= report.c2);
    CHECK(report.cover_size >= report.lower_bound); // weak sanity at this size
    CHECK(report.cover_valid);
}
