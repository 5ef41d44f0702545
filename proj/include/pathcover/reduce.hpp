#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathcover/classify.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

// The auxiliary graph: the 2-core of the unique largest component with the
// problematic vertex classes removed, plus the label-order matching M on
// the neighbours of the degree-1 vertices that survive. M' is M lifted to
// those degree-1 vertices themselves.
struct Reduction {
    std::vector<int> c2_vertices;              // g labels, sorted
    Graph gstar;                               // relabelled 0..k-1
    std::vector<int> to_g;                     // gstar label -> g label (ascending)
    std::vector<int> to_gstar;                 // g label -> gstar label or -1
    std::vector<std::pair<int, int>> m_edges;  // gstar labels, each pair (lo, hi)
    std::vector<std::pair<int, int>> m_prime;  // g labels, lifted pairs
    std::vector<int> v1_star;                  // g labels of lifted endpoints, sorted
    std::vector<int> partner;                  // by gstar label: g label of the
                                               // unique degree-1 neighbour, or -1

    // Structural expectations evaluated during construction; violations are
    // recorded, not fatal (they can occur at small mean degree).
    struct Diagnostics {
        int dropped_from_matching = 0;   // eligible vertices without a unique
                                         // degree-1 neighbour outside CLOSE
        int unpaired = 0;                // 1 when the eligible set had odd size
        int matching_adjacent_pairs = 0; // non-M gstar edges inside V(M)
        int degree_floor_violations = 0; // v with < 2 gstar-neighbours outside V(M)
        int lift_violations = 0;         // lifted pairs sharing endpoints
    };
    Diagnostics diagnostics;
};

// 2-core of the largest connected component; empty when the largest
// component is not unique.
std::vector<int> connected_two_core(const Graph& g);

Reduction build_gstar(const Graph& g, const Classification& cls, const std::vector<int>& c2);

// M' from the partner map: one lifted pair per matching edge.
std::vector<std::pair<int, int>> lift_matching(const Reduction& r);

struct ReductionSizeCheck {
    std::string name;
    bool applicable = true;
    bool pass = false;
    double measured = 0.0;
    double bound = 0.0;
};

struct ReductionSizeReport {
    std::vector<ReductionSizeCheck> checks;
    bool all_pass() const;
};

struct ReductionSizeParams {
    double epsilon = 0.5;
    double c2_rel_tol = 0.01; // relative tolerance on the 2-core size
};

// Compares |V(G*)|, |V(M)| and |C2| against their predicted sizes.
ReductionSizeReport check_reduction_sizes(const Reduction& r, double c, long long n,
                                          const ReductionSizeParams& params);

} // namespace pathcover
