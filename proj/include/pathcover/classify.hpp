#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Degree/distance thresholds for the vertex classification. The literal
// constants (c/1000, 20c, radius 4) are only meaningful for very large c;
// the defaults floor the small-degree cut at 2 so the classification stays
// non-trivial for mean degrees in the single digits.
struct Thresholds {
    int small_deg = 2;
    int large_deg = 0;
    int close_radius = 4;

    static Thresholds for_mean_degree(double c);
    void validate() const; // small_deg >= 2, close_radius >= 1
};

// All vertex sets are sorted ascending.
struct Classification {
    std::vector<int> v0;                // degree 0
    std::vector<int> v1;                // degree 1
    std::vector<int> small;
    std::vector<int> large;
    std::vector<int> close;
    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> bad;               // x ∪ y
    std::vector<int> n_v1_neighbours;   // external neighbourhood of v1
};

struct BasicClasses {
    std::vector<int> v0;
    std::vector<int> v1;
    std::vector<int> large;
    std::vector<int> n_v1_neighbours;
};

BasicClasses classify_basic(const Graph& g, const Thresholds& t);

// SMALL: vertices with fewer than small_deg neighbours outside N(V1).
std::vector<int> compute_small(const Graph& g, const Thresholds& t,
                               const std::vector<int>& n_v1_neighbours);

// CLOSE: vertices of SMALL within distance close_radius of another SMALL
// vertex, or lying on a cycle of length <= close_radius.
std::vector<int> compute_close(const Graph& g, const Thresholds& t,
                               const std::vector<int>& small);

// The unique minimal X with degree(v, SMALL ∪ X) <= 1 for every v outside
// X, built by the greedy fixed-point process scanning candidates in
// ascending label order. The result is independent of the scan order.
std::vector<int> compute_x(const Graph& g, const std::vector<int>& small);

// Same process with an explicit candidate scan order (ranking vertices by
// their position in `scan_order`); exists so tests can check order
// independence.
std::vector<int> compute_x_scanning(const Graph& g, const std::vector<int>& small,
                                    const std::vector<int>& scan_order);

struct BadSets {
    std::vector<int> x;
    std::vector<int> y; // degree exactly 2 with exactly one neighbour in X
    std::vector<int> bad;
};

BadSets compute_bad(const Graph& g, const std::vector<int>& small);

// Full classification pipeline.
Classification classify(const Graph& g, const Thresholds& t);

// One structural property check. Sampled checks can only report
// "not falsified"; `sampled` records that distinction.
struct PropertyCheck {
    std::string name;
    bool applicable = true;
    bool pass = false;
    bool sampled = false;
    double measured = 0.0;
    double bound = 0.0;
    std::string note;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_pass() const;
    const PropertyCheck* find(const std::string& name) const;
};

struct PropertyCheckConfig {
    double slack = 1.0;       // multiplies upper bounds, divides lower bounds
    int subset_samples = 1000; // random subsets per sampled property
    uint64_t seed = 0;
};

// Evaluates the structural properties of the classification: the V1 window,
// the SMALL/LARGE/CLOSE/BAD size bounds, the subset edge-density cap and
// the cross-edge floor. The two subset properties quantify over
// exponentially many sets and are only sampled.
PropertyReport check_properties(const Graph& g, const Classification& cls, double c,
                                const PropertyCheckConfig& config);

} // namespace pathcover
