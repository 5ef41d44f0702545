#include "pathcover/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathcover {

double predict_degree_count(int d, double c, long long n) {
    if (d < 0) throw std::invalid_argument("predict_degree_count: d must be >= 0");
    if (c <= 0.0) throw std::invalid_argument("predict_degree_count: c must be positive");
    double log_term = -c + d * std::log(c) - std::lgamma(static_cast<double>(d) + 1.0);
    return std::exp(log_term) * static_cast<double>(n);
}

double solve_two_core_x(double c) {
    if (c <= 1.0) throw std::domain_error("solve_two_core_x: requires c > 1");
    const double target = c * std::exp(-c);
    // x e^{-x} is strictly increasing on (0,1), so bisection is safe.
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        double value = mid * std::exp(-mid);
        if (value < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

double predict_two_core_size(double c, long long n) {
    if (n == 0) return 0.0;
    double x = solve_two_core_x(c);
    return (1.0 - x) * (1.0 - x / c) * static_cast<double>(n);
}

Prediction make_prediction(const std::string& quantity, double predicted, double measured,
                           double tolerance) {
    Prediction p;
    p.quantity = quantity;
    p.predicted = predicted;
    p.measured = measured;
    p.tolerance = tolerance;
    p.relative_error = std::fabs(measured - predicted) / std::max(std::fabs(predicted), 1e-12);
    p.pass = p.relative_error <= tolerance;
    return p;
}

QuantityStats aggregate_values(const std::string& quantity, const std::vector<double>& values,
                               const std::vector<bool>* passes) {
    if (values.empty()) throw std::invalid_argument("aggregate_values: empty input");
    if (passes && passes->size() != values.size())
        throw std::invalid_argument("aggregate_values: pass flags size mismatch");
    QuantityStats stats;
    stats.quantity = quantity;
    stats.count = static_cast<int>(values.size());
    double sum = 0.0;
    stats.min = values.front();
    stats.max = values.front();
    for (double v : values) {
        sum += v;
        stats.min = std::min(stats.min, v);
        stats.max = std::max(stats.max, v);
    }
    stats.mean = sum / stats.count;
    double sq = 0.0;
    for (double v : values) sq += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(sq / stats.count);
    if (passes) {
        int ok = 0;
        for (bool b : *passes) ok += b ? 1 : 0;
        stats.pass_rate = static_cast<double>(ok) / stats.count;
    }
    return stats;
}

std::vector<QuantityStats> aggregate_trials(const std::vector<std::vector<Prediction>>& trials) {
    if (trials.empty()) throw std::invalid_argument("aggregate_trials: empty input");
    std::vector<std::string> order;
    for (const auto& trial : trials)
        for (const auto& p : trial)
            if (std::find(order.begin(), order.end(), p.quantity) == order.end())
                order.push_back(p.quantity);
    std::vector<QuantityStats> result;
    for (const auto& name : order) {
        std::vector<double> values;
        std::vector<bool> passes;
        for (const auto& trial : trials)
            for (const auto& p : trial)
                if (p.quantity == name) {
                    values.push_back(p.measured);
                    passes.push_back(p.pass);
                }
        result.push_back(aggregate_values(name, values, &passes));
    }
    return result;
}

} // namespace pathcover
