#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcover/analytics.hpp"
#include "pathcover/cover.hpp"
#include "pathcover/expander.hpp"
#include "pathcover/experiment.hpp"
#include "pathcover/hamilton.hpp"
#include "pathcover/reduce.hpp"
#include "pathcover/rng.hpp"
#include "pathcover/sample.hpp"

using namespace pathcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

Graph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return Graph::parse_edge_list(buffer.str());
}

struct SolveOutcome {
    Reduction reduction;
    HamiltonResult ham;
    PathCover cover;
    CoverVerdict verdict;
    int retries_used = 0;
};

// The library pipeline on an arbitrary graph; mirrors run_trial but takes
// the graph from a file instead of the sampler.
SolveOutcome solve_graph(const Graph& g, double c, uint64_t seed, std::optional<int> gamma_cap,
                         std::optional<long long> budget, int retries) {
    SolveOutcome out;
    Classification cls = classify(g, Thresholds::for_mean_degree(c));
    out.reduction = build_gstar(g, cls, connected_two_core(g));
    std::vector<int> small_in_gstar;
    for (int v : cls.small)
        if (out.reduction.to_gstar[v] >= 0) small_in_gstar.push_back(out.reduction.to_gstar[v]);
    std::sort(small_in_gstar.begin(), small_in_gstar.end());
    int cap = gamma_cap ? *gamma_cap : std::max(3, static_cast<int>(std::floor(c / 1000.0)));
    long long budget_value =
        budget ? *budget : std::max<long long>(1, out.reduction.gstar.vertex_count());
    uint64_t gamma_root = derive_seed(seed, RngStream::gamma_selection);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        out.retries_used = attempt;
        Gamma gamma0 = build_gamma0(out.reduction.gstar, out.reduction.m_edges, small_in_gstar,
                                    cap, derive_seed(gamma_root, static_cast<uint64_t>(attempt)));
        out.ham = hamilton_m_cycle(out.reduction.gstar, out.reduction.m_edges, gamma0, budget_value);
        if (out.ham.success) break;
    }
    if (out.ham.success) {
        out.cover = extract_cover(g, out.reduction, out.ham.cycle);
    } else {
        for (int v = 0; v < g.vertex_count(); ++v) out.cover.paths.push_back({v});
    }
    out.verdict = verify_cover(g, out.cover);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"path covers of sparse random graphs: pipeline experiments, "
                 "one-shot solves, exact small-graph oracle and analytic predictions"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "run a multi-trial experiment");
    ExperimentConfig config;
    std::vector<double> c_values;
    int threads = 0;
    run->add_option("--n", config.n, "vertex count")->capture_default_str();
    run->add_option("--c", c_values, "mean degree (repeat for a grid)");
    run->add_option("--trials", config.trials, "trials per c value")->capture_default_str();
    run->add_option("--seed", config.master_seed, "master seed")->capture_default_str();
    std::optional<int> small_deg, large_deg, close_radius, gamma_cap;
    std::optional<long long> budget;
    run->add_option("--small-deg", small_deg, "SMALL degree threshold (default max(2, c/1000))");
    run->add_option("--large-deg", large_deg, "LARGE degree threshold (default ceil(20c))");
    run->add_option("--close-radius", close_radius, "CLOSE distance threshold (default 4)");
    run->add_option("--gamma-cap", gamma_cap, "per-vertex edge cap in gamma0 (default max(3, c/1000))");
    run->add_option("--budget", budget, "booster budget (default |V(G*)|)");
    run->add_option("--retries", config.retries, "gamma0 retries after failure")
        ->capture_default_str();
    bool oracle = false;
    run->add_flag("--oracle", oracle, "record the exact cover number (needs n <= 16)");
    run->add_option("--checks", config.checks,
                    "enable acceptance checks: properties, sizes (exit 1 on failure)");
    run->add_option("--check-slack", config.check_slack,
                    "slack factor applied to the literal bounds")
        ->capture_default_str();
    run->add_option("--epsilon", config.epsilon, "epsilon for the size checks")
        ->capture_default_str();
    run->add_option("--out", config.out_dir, "directory for trials.csv, summary.csv, report.json");
    run->add_option("--format", config.format, "stdout format: csv or json")
        ->capture_default_str();
    run->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    bool timings = false;
    run->add_flag("--timings", timings,
                  "include wall-clock timings in CSV output (breaks byte-identical reruns)");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "cover one graph from an edge-list file");
    std::string solve_in;
    solve->add_option("--in", solve_in, "edge-list file (\"n m\" header, one edge per line)")
        ->required();
    std::optional<double> solve_c;
    solve->add_option("--c", solve_c, "mean-degree parameter (default 2m/n)");
    uint64_t solve_seed = 1;
    solve->add_option("--seed", solve_seed, "seed for gamma0")->capture_default_str();
    std::optional<int> solve_cap;
    std::optional<long long> solve_budget;
    int solve_retries = 3;
    solve->add_option("--gamma-cap", solve_cap, "per-vertex edge cap in gamma0");
    solve->add_option("--budget", solve_budget, "booster budget");
    solve->add_option("--retries", solve_retries, "gamma0 retries")->capture_default_str();
    std::string solve_out;
    solve->add_option("--out", solve_out, "write the cover here instead of stdout");
    std::string solve_format = "paths";
    solve->add_option("--format", solve_format, "paths (one per line) or json")
        ->capture_default_str();

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "exact cover number of a small graph file");
    std::string oracle_in;
    oracle_cmd->add_option("--in", oracle_in, "edge-list file, at most 16 vertices")->required();

    // ---- predict ----
    auto* predict = app.add_subcommand("predict", "analytic predictions for given c and n");
    std::vector<double> predict_c;
    predict->add_option("--c", predict_c, "mean degree (repeatable)")->required();
    long long predict_n = 100000;
    predict->add_option("--n", predict_n, "vertex count")->capture_default_str();
    std::string predict_format = "csv";
    predict->add_option("--format", predict_format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            if (!c_values.empty()) config.c_values = c_values;
            config.small_deg = small_deg;
            config.large_deg = large_deg;
            config.close_radius = close_radius;
            config.gamma_cap = gamma_cap;
            config.booster_budget = budget;
            config.run_oracle = oracle;
            config.threads = threads;
            config.include_timings = timings;
            ExperimentSummary summary = run_experiment(config);
            if (config.format == "json")
                std::cout << experiment_to_json(config, summary);
            else
                std::cout << trials_to_csv(summary.trials, timings) << '\n'
                          << summary_to_csv(summary.stats);
            return summary.all_checks_pass ? kExitOk : kExitCheckFailure;
        }

        if (*solve) {
            Graph g = load_graph(solve_in);
            double c = solve_c ? *solve_c
                               : (g.vertex_count() > 0
                                      ? 2.0 * static_cast<double>(g.edge_count()) / g.vertex_count()
                                      : 0.0);
            SolveOutcome out =
                solve_graph(g, c, solve_seed, solve_cap, solve_budget, solve_retries);
            std::string rendered;
            if (solve_format == "json") {
                nlohmann::json j;
                j["n"] = g.vertex_count();
                j["m"] = g.edge_count();
                j["c"] = c;
                j["hamilton_success"] = out.ham.success;
                j["boosters"] = out.ham.boosters_used;
                j["retries_used"] = out.retries_used;
                if (!out.ham.failure_reason.empty()) j["failure_reason"] = out.ham.failure_reason;
                j["cover_size"] = out.cover.size();
                j["lower_bound"] = lower_bound_mu(g);
                j["cover_valid"] = out.verdict.pass;
                j["paths"] = out.cover.paths;
                rendered = j.dump(2) + "\n";
            } else {
                for (const auto& path : out.cover.paths) {
                    std::string line;
                    for (size_t i = 0; i < path.size(); ++i) {
                        if (i) line += ' ';
                        line += std::to_string(path[i]);
                    }
                    rendered += line + "\n";
                }
            }
            if (solve_out.empty()) {
                std::cout << rendered;
            } else {
                std::ofstream f(solve_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + solve_out);
                f << rendered;
            }
            std::cerr << "cover_size=" << out.cover.size() << " lower_bound=" << lower_bound_mu(g)
                      << " boosters=" << out.ham.boosters_used
                      << " valid=" << (out.verdict.pass ? 1 : 0) << "\n";
            return out.verdict.pass ? kExitOk : kExitCheckFailure;
        }

        if (*oracle_cmd) {
            Graph g = load_graph(oracle_in);
            if (g.vertex_count() > 16) {
                std::cerr << "oracle: graph has " << g.vertex_count()
                          << " vertices; the exact oracle is limited to 16\n";
                return kExitUsage;
            }
            std::cout << exact_mu(g) << "\n";
            return kExitOk;
        }

        if (*predict) {
            nlohmann::json rows = nlohmann::json::array();
            std::string csv =
                "c,n,x,two_core_fraction,v0_fraction,v1_fraction,target_cover_fraction\n";
            for (double c : predict_c) {
                double x = c > 1.0 ? solve_two_core_x(c) : std::nan("");
                double core = c > 1.0 ? predict_two_core_size(c, predict_n) /
                                            static_cast<double>(predict_n)
                                      : std::nan("");
                double v0 = predict_degree_count(0, c, predict_n) / predict_n;
                double v1 = predict_degree_count(1, c, predict_n) / predict_n;
                double target = 0.5 * c * std::exp(-c);
                char buf[256];
                std::snprintf(buf, sizeof(buf), "%.17g,%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n", c,
                              predict_n, x, core, v0, v1, target);
                csv += buf;
                rows.push_back({{"c", c},
                                {"n", predict_n},
                                {"x", x},
                                {"two_core_fraction", core},
                                {"v0_fraction", v0},
                                {"v1_fraction", v1},
                                {"target_cover_fraction", target}});
            }
            if (predict_format == "json")
                std::cout << rows.dump(2) << "\n";
            else
                std::cout << csv;
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
