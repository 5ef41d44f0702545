#pragma once

#include <string>
#include <vector>

#include "pathcover/graph.hpp"
#include "pathcover/reduce.hpp"

namespace pathcover {

// Vertex-disjoint paths (singletons allowed) covering V(G).
struct PathCover {
    std::vector<std::vector<int>> paths;
    long long size() const { return static_cast<long long>(paths.size()); }
};

// Translates a verified Hamilton M-cycle of G* into a path cover of G:
// matching edges become 3-paths through the degree-1 partners, the lifted
// matching edges are deleted (one arbitrary cycle edge when the lift is
// empty), and everything off the cycle becomes a length-0 path. Throws
// std::invalid_argument when the cycle does not verify.
PathCover extract_cover(const Graph& g, const Reduction& r, const std::vector<int>& cycle);

struct CoverVerdict {
    bool pass = false;
    std::vector<std::string> violations;
};

// Disjointness, full coverage, and edge validity of consecutive pairs.
CoverVerdict verify_cover(const Graph& g, const PathCover& cover);

// |V0| + ceil(|V1|/2): every path covers at most two degree-1 vertices and
// an isolated vertex needs its own path. A lower bound on the cover number
// whenever the graph is not Hamiltonian.
long long lower_bound_mu(const Graph& g);

// Exact path cover number for n <= 16 (0 when Hamiltonian), by dynamic
// programming over (vertex subset, path endpoint) states. Throws
// std::invalid_argument for larger graphs.
int exact_mu(const Graph& g);

struct MuGapReport {
    long long cover_size = 0;
    long long lower_bound = 0;
    double target = 0.0; // (1/2) c e^{-c} n
    double ratio_lower = 0.0;
    double ratio_target = 0.0;
};

MuGapReport mu_gap(const Graph& g, const PathCover& cover, double c);

} // namespace pathcover
