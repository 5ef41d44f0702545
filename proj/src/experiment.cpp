#include "pathcover/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pathcover/cover.hpp"
#include "pathcover/expander.hpp"
#include "pathcover/hamilton.hpp"
#include "pathcover/reduce.hpp"
#include "pathcover/rng.hpp"
#include "pathcover/sample.hpp"

namespace pathcover {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace

void ExperimentConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be >= 1");
    if (c_values.empty()) throw std::invalid_argument("config: at least one c value");
    for (double c : c_values)
        if (c < 0.0 || c > static_cast<double>(n))
            throw std::invalid_argument("config: c must be in [0, n]");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (retries < 0) throw std::invalid_argument("config: retries must be >= 0");
    if (gamma_cap && *gamma_cap < 2) throw std::invalid_argument("config: gamma-cap must be >= 2");
    if (booster_budget && *booster_budget < 1)
        throw std::invalid_argument("config: budget must be >= 1");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("config: format must be csv or json");
    for (const auto& check : checks)
        if (check != "properties" && check != "sizes")
            throw std::invalid_argument("config: unknown check " + check);
    if (run_oracle && n > 16) throw std::invalid_argument("config: oracle needs n <= 16");
}

TrialReport run_trial(const ExperimentConfig& config, int trial_index) {
    TrialReport report;
    report.trial_index = trial_index;
    report.n = config.n;
    report.c = config.c_values[trial_index / config.trials];
    // Per-trial seed: the documented two-step derivation from the master
    // seed and the flat trial index.
    report.seed = derive_seed(derive_seed(config.master_seed, RngStream::trial),
                              static_cast<uint64_t>(trial_index));

    auto t0 = std::chrono::steady_clock::now();
    Graph g = sample_gnp({config.n, report.c, report.seed});
    report.ms_sample = ms_since(t0);

    Thresholds thresholds = Thresholds::for_mean_degree(report.c);
    if (config.small_deg) thresholds.small_deg = *config.small_deg;
    if (config.large_deg) thresholds.large_deg = *config.large_deg;
    if (config.close_radius) thresholds.close_radius = *config.close_radius;

    t0 = std::chrono::steady_clock::now();
    Classification cls = classify(g, thresholds);
    report.ms_classify = ms_since(t0);
    report.v0 = static_cast<long long>(cls.v0.size());
    report.v1 = static_cast<long long>(cls.v1.size());
    report.small = static_cast<long long>(cls.small.size());
    report.large = static_cast<long long>(cls.large.size());
    report.close = static_cast<long long>(cls.close.size());
    report.bad = static_cast<long long>(cls.bad.size());

    t0 = std::chrono::steady_clock::now();
    std::vector<int> c2 = connected_two_core(g);
    Reduction reduction = build_gstar(g, cls, c2);
    report.ms_reduce = ms_since(t0);
    report.c2 = static_cast<long long>(c2.size());
    report.gstar_n = static_cast<long long>(reduction.to_g.size());
    report.m_size = static_cast<long long>(reduction.m_edges.size());
    report.gstar_floor_violations = reduction.diagnostics.degree_floor_violations;
    report.matching_dropped = reduction.diagnostics.dropped_from_matching;

    std::vector<int> small_in_gstar;
    for (int v : cls.small)
        if (reduction.to_gstar[v] >= 0) small_in_gstar.push_back(reduction.to_gstar[v]);
    std::sort(small_in_gstar.begin(), small_in_gstar.end());

    const int cap = config.gamma_cap
                        ? *config.gamma_cap
                        : std::max(3, static_cast<int>(std::floor(report.c / 1000.0)));
    const long long budget =
        config.booster_budget ? *config.booster_budget
                              : std::max<long long>(1, report.gstar_n);

    HamiltonResult ham;
    t0 = std::chrono::steady_clock::now();
    uint64_t gamma_root = derive_seed(report.seed, RngStream::gamma_selection);
    for (int attempt = 0; attempt <= config.retries; ++attempt) {
        report.retries_used = attempt;
        Gamma gamma0 =
            build_gamma0(reduction.gstar, reduction.m_edges, small_in_gstar, cap,
                         derive_seed(gamma_root, static_cast<uint64_t>(attempt)));
        ham = hamilton_m_cycle(reduction.gstar, reduction.m_edges, gamma0, budget);
        report.ms_gamma = ms_since(t0); // includes all attempts so far
        if (ham.success) break;
    }
    report.ms_hamilton = ms_since(t0);
    report.hamilton_success = ham.success;
    report.boosters = ham.boosters_used;
    report.failure_reason = ham.failure_reason;

    t0 = std::chrono::steady_clock::now();
    PathCover cover;
    if (ham.success) {
        cover = extract_cover(g, reduction, ham.cycle);
    } else {
        // Structured failure: fall back to the trivial cover so the trial
        // still reports a valid (if weak) bound.
        for (int v = 0; v < g.vertex_count(); ++v) cover.paths.push_back({v});
    }
    CoverVerdict cover_verdict = verify_cover(g, cover);
    report.cover_valid = cover_verdict.pass;
    report.success = report.hamilton_success && report.cover_valid;
    MuGapReport gap = mu_gap(g, cover, report.c);
    report.cover_size = gap.cover_size;
    report.lower_bound = gap.lower_bound;
    report.target = gap.target;
    report.ratio_lower = gap.ratio_lower;
    report.ratio_target = gap.ratio_target;
    report.ms_cover = ms_since(t0);

    if (config.run_oracle && config.n <= 16) report.exact = exact_mu(g);

    for (const auto& check : config.checks) {
        if (check == "properties") {
            PropertyCheckConfig pc;
            pc.slack = config.check_slack;
            pc.seed = report.seed;
            PropertyReport pr = check_properties(g, cls, report.c, pc);
            report.checks_pass = report.checks_pass && pr.all_pass();
        } else if (check == "sizes") {
            ReductionSizeParams params;
            params.epsilon = config.epsilon;
            ReductionSizeReport sr = check_reduction_sizes(reduction, report.c, config.n, params);
            report.checks_pass = report.checks_pass && sr.all_pass();
        }
    }
    return report;
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
    config.validate();

    std::filesystem::path out_dir;
    if (!config.out_dir.empty()) {
        out_dir = config.out_dir;
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        std::ofstream probe(out_dir / "trials.csv");
        if (!probe) throw std::runtime_error("run_experiment: cannot write to " + config.out_dir);
    }

    const int total = config.total_trials();
    ExperimentSummary summary;
    summary.trials.resize(total);

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, total));
    if (workers == 1) {
        for (int i = 0; i < total; ++i) summary.trials[i] = run_trial(config, i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    int i = next.fetch_add(1);
                    if (i >= total) return;
                    summary.trials[i] = run_trial(config, i);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (size_t ci = 0; ci < config.c_values.size(); ++ci) {
        auto begin = summary.trials.begin() + ci * config.trials;
        auto end = begin + config.trials;
        std::string suffix = "(c=" + format_double(config.c_values[ci]) + ")";
        auto collect = [&](const std::string& name, auto getter) {
            std::vector<double> values;
            for (auto it = begin; it != end; ++it) values.push_back(getter(*it));
            summary.stats.push_back(aggregate_values(name + suffix, values));
        };
        collect("v1/n", [](const TrialReport& t) { return double(t.v1) / double(t.n); });
        collect("v0/n", [](const TrialReport& t) { return double(t.v0) / double(t.n); });
        collect("small", [](const TrialReport& t) { return double(t.small); });
        collect("close", [](const TrialReport& t) { return double(t.close); });
        collect("bad", [](const TrialReport& t) { return double(t.bad); });
        collect("c2/n", [](const TrialReport& t) { return double(t.c2) / double(t.n); });
        collect("gstar/n", [](const TrialReport& t) { return double(t.gstar_n) / double(t.n); });
        collect("m_size", [](const TrialReport& t) { return double(t.m_size); });
        collect("boosters", [](const TrialReport& t) { return double(t.boosters); });
        collect("success", [](const TrialReport& t) { return t.success ? 1.0 : 0.0; });
        collect("cover_size", [](const TrialReport& t) { return double(t.cover_size); });
        collect("ratio_lower", [](const TrialReport& t) { return t.ratio_lower; });
        collect("ratio_target", [](const TrialReport& t) { return t.ratio_target; });
    }
    for (const auto& trial : summary.trials)
        summary.all_checks_pass = summary.all_checks_pass && trial.checks_pass;

    if (!config.out_dir.empty()) {
        std::ofstream trials_csv(out_dir / "trials.csv", std::ios::binary);
        trials_csv << trials_to_csv(summary.trials, config.include_timings);
        std::ofstream summary_csv(out_dir / "summary.csv", std::ios::binary);
        summary_csv << summary_to_csv(summary.stats);
        std::ofstream json_out(out_dir / "report.json", std::ios::binary);
        json_out << experiment_to_json(config, summary);
    }
    return summary;
}

std::string trials_to_csv(const std::vector<TrialReport>& trials, bool include_timings) {
    std::string out =
        "c,trial,seed,n,v0,v1,small,large,close,bad,c2,gstar_n,m_size,boosters,retries_used,"
        "hamilton_success,cover_valid,success,cover_size,lower_bound,target,ratio_lower,"
        "ratio_target,exact_mu,checks_pass,floor_violations,matching_dropped,failure_reason";
    if (include_timings) out += ",ms_sample,ms_classify,ms_reduce,ms_hamilton,ms_cover";
    out += '\n';
    for (const auto& t : trials) {
        out += format_double(t.c) + ',' + std::to_string(t.trial_index) + ',' +
               std::to_string(t.seed) + ',' + std::to_string(t.n) + ',' + std::to_string(t.v0) +
               ',' + std::to_string(t.v1) + ',' + std::to_string(t.small) + ',' +
               std::to_string(t.large) + ',' + std::to_string(t.close) + ',' +
               std::to_string(t.bad) + ',' + std::to_string(t.c2) + ',' +
               std::to_string(t.gstar_n) + ',' + std::to_string(t.m_size) + ',' +
               std::to_string(t.boosters) + ',' + std::to_string(t.retries_used) + ',' +
               std::to_string(int(t.hamilton_success)) + ',' + std::to_string(int(t.cover_valid)) +
               ',' + std::to_string(int(t.success)) + ',' + std::to_string(t.cover_size) + ',' +
               std::to_string(t.lower_bound) + ',' + format_double(t.target) + ',' +
               format_double(t.ratio_lower) + ',' + format_double(t.ratio_target) + ',' +
               std::to_string(t.exact) + ',' + std::to_string(int(t.checks_pass)) + ',' +
               std::to_string(t.gstar_floor_violations) + ',' +
               std::to_string(t.matching_dropped) + ',' + t.failure_reason;
        if (include_timings)
            out += ',' + format_double(t.ms_sample) + ',' + format_double(t.ms_classify) + ',' +
                   format_double(t.ms_reduce) + ',' + format_double(t.ms_hamilton) + ',' +
                   format_double(t.ms_cover);
        out += '\n';
    }
    return out;
}

std::string summary_to_csv(const std::vector<QuantityStats>& stats) {
    std::string out = "quantity,count,mean,stddev,min,max,pass_rate\n";
    for (const auto& s : stats)
        out += s.quantity + ',' + std::to_string(s.count) + ',' + format_double(s.mean) + ',' +
               format_double(s.stddev) + ',' + format_double(s.min) + ',' + format_double(s.max) +
               ',' + format_double(s.pass_rate) + '\n';
    return out;
}

std::string experiment_to_json(const ExperimentConfig& config, const ExperimentSummary& summary) {
    nlohmann::json j;
    j["config"] = {{"n", config.n},
                   {"c", config.c_values},
                   {"trials", config.trials},
                   {"seed", config.master_seed},
                   {"retries", config.retries},
                   {"checks", config.checks}};
    j["all_checks_pass"] = summary.all_checks_pass;
    j["trials"] = nlohmann::json::array();
    for (const auto& t : summary.trials) {
        nlohmann::json row = {
            {"c", t.c},
            {"trial", t.trial_index},
            {"seed", t.seed},
            {"n", t.n},
            {"sizes",
             {{"v0", t.v0},
              {"v1", t.v1},
              {"small", t.small},
              {"large", t.large},
              {"close", t.close},
              {"bad", t.bad},
              {"c2", t.c2},
              {"gstar", t.gstar_n},
              {"m", t.m_size}}},
            {"boosters", t.boosters},
            {"retries_used", t.retries_used},
            {"success", t.success},
            {"cover_size", t.cover_size},
            {"lower_bound", t.lower_bound},
            {"target", t.target},
            {"ratio_lower", t.ratio_lower},
            {"ratio_target", t.ratio_target},
            {"checks_pass", t.checks_pass}};
        if (t.exact >= 0) row["exact_mu"] = t.exact;
        if (!t.failure_reason.empty()) row["failure_reason"] = t.failure_reason;
        j["trials"].push_back(row);
    }
    j["summary"] = nlohmann::json::array();
    for (const auto& s : summary.stats)
        j["summary"].push_back({{"quantity", s.quantity},
                                {"count", s.count},
                                {"mean", s.mean},
                                {"stddev", s.stddev},
                                {"min", s.min},
                                {"max", s.max},
                                {"pass_rate", s.pass_rate}});
    return j.dump(2) + "\n";
}

} // namespace pathcover
