#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pathcover/analytics.hpp"

using namespace pathcover;

TEST_CASE("predict_degree_count matches the closed form") {
    CHECK(predict_degree_count(0, 1.0, 100) == doctest::Approx(std::exp(-1.0) * 100));
    CHECK(predict_degree_count(1, 6.0, 100000) == doctest::Approx(6.0 * std::exp(-6.0) * 1e5));
    CHECK(predict_degree_count(2, 2.0, 100) == doctest::Approx(std::exp(-2.0) * 2.0 * 100));
    CHECK_THROWS_AS(predict_degree_count(-1, 2.0, 10), std::invalid_argument);
}

TEST_CASE("degree count predictions sum to n") {
    for (double c : {2.0, 6.0, 12.0}) {
        double sum = 0.0;
        for (int d = 0; d <= static_cast<int>(10 * c); ++d)
            sum += predict_degree_count(d, c, 1000000);
        CHECK(std::fabs(sum - 1e6) <= 1e-9 * 1e6);
    }
}

TEST_CASE("solve_two_core_x") {
    CHECK_THROWS_AS(solve_two_core_x(1.0), std::domain_error);
    CHECK_THROWS_AS(solve_two_core_x(0.5), std::domain_error);

    CHECK(solve_two_core_x(1.0001) > 0.98);

    // Residual contract on a grid.
    for (double c = 1.5; c <= 30.0; c += 0.5) {
        double x = solve_two_core_x(c);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        CHECK(std::fabs(x * std::exp(-x) - c * std::exp(-c)) <= 1e-12);
    }

    // Second-order asymptotics at c = 6. The neglected third-order term is
    // about 3.3e-4 of x, so the comparison needs a slightly wider window.
    double x6 = solve_two_core_x(6.0);
    double asym = 6.0 * std::exp(-6.0) + 36.0 * std::exp(-12.0);
    CHECK(std::fabs(x6 - asym) / asym < 5e-4);
    // At larger c the second-order form tightens below 1e-4 relative error.
    double x10 = solve_two_core_x(10.0);
    double asym10 = 10.0 * std::exp(-10.0) + 100.0 * std::exp(-20.0);
    CHECK(std::fabs(x10 - asym10) / asym10 < 1e-4);
}

TEST_CASE("asymptotic error decreases in c") {
    double prev = -1.0;
    for (double c = 5.0; c <= 12.0; c += 1.0) {
        double x = solve_two_core_x(c);
        double asym = c * std::exp(-c) + c * c * std::exp(-2.0 * c);
        double scaled = std::fabs(x - asym) / std::exp(-2.0 * c);
        if (prev >= 0.0) CHECK(scaled <= prev + 1e-9);
        CHECK(scaled < 1e3);
        prev = scaled;
    }
}

TEST_CASE("predict_two_core_size") {
    CHECK(predict_two_core_size(6.0, 0) == 0.0);
    double p20 = predict_two_core_size(20.0, 1000000);
    double floor20 = (1.0 - 21.0 * std::exp(-20.0) - 2.0 * 400.0 * std::exp(-40.0)) * 1e6;
    CHECK(p20 >= floor20);
    CHECK(p20 <= 1e6);
}

TEST_CASE("make_prediction relative error floor") {
    Prediction p = make_prediction("q", 0.0, 1e-13, 1.0);
    CHECK(p.relative_error == doctest::Approx(1e-13 / 1e-12));
    CHECK(p.pass);
}

TEST_CASE("aggregate_values and aggregate_trials") {
    CHECK_THROWS_AS(aggregate_values("q", {}), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_trials({}), std::invalid_argument);

    auto single = aggregate_values("q", {1.5});
    CHECK(single.mean == 1.5);
    CHECK(single.stddev == 0.0);
    CHECK(single.min == 1.5);
    CHECK(single.max == 1.5);

    auto two = aggregate_values("q", {1.0, 3.0});
    CHECK(two.mean == 2.0);
    CHECK(two.min == 1.0);
    CHECK(two.max == 3.0);
    CHECK(two.stddev == doctest::Approx(1.0));

    std::vector<std::vector<Prediction>> trials{
        {make_prediction("a", 1.0, 1.0, 0.1), make_prediction("b", 2.0, 3.0, 0.1)},
        {make_prediction("a", 1.0, 1.05, 0.1)}};
    auto stats = aggregate_trials(trials);
    REQUIRE(stats.size() == 2);
    CHECK(stats[0].quantity == "a");
    CHECK(stats[0].count == 2);
    CHECK(stats[0].mean == doctest::Approx(1.025));
    CHECK(stats[0].pass_rate == doctest::Approx(1.0));
    CHECK(stats[1].quantity == "b");
    CHECK(stats[1].pass_rate == 0.0);
}
