#pragma once

#include <string>
#include <vector>

namespace pathcover {

// Expected number of vertices of degree exactly d in G(n, c/n):
// e^{-c} c^d / d! * n. Evaluated in log space so large d stays finite.
double predict_degree_count(int d, double c, long long n);

// The unique x in (0,1) with x e^{-x} = c e^{-c}, for c > 1, found by
// bisection to residual <= 1e-12. Throws std::domain_error for c <= 1.
double solve_two_core_x(double c);

// Predicted size of the connected 2-core: (1 - x)(1 - x/c) n.
double predict_two_core_size(double c, long long n);

// One predicted-vs-measured comparison. relative_error uses a floor of
// 1e-12 in the denominator so near-zero predictions do not blow up.
struct Prediction {
    std::string quantity;
    double predicted = 0.0;
    double measured = 0.0;
    double relative_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

Prediction make_prediction(const std::string& quantity, double predicted, double measured,
                           double tolerance);

struct QuantityStats {
    std::string quantity;
    int count = 0;
    double mean = 0.0;
    double stddev = 0.0; // population standard deviation
    double min = 0.0;
    double max = 0.0;
    double pass_rate = 1.0;
};

// Stats over raw values; `passes`, when given, must be the same length.
QuantityStats aggregate_values(const std::string& quantity, const std::vector<double>& values,
                               const std::vector<bool>* passes = nullptr);

// Per-quantity aggregation across trials, quantities ordered by first
// appearance. Throws std::invalid_argument on empty input.
std::vector<QuantityStats> aggregate_trials(const std::vector<std::vector<Prediction>>& trials);

} // namespace pathcover
