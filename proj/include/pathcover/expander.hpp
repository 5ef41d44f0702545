#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

using Matching = std::vector<std::pair<int, int>>;

// Mutable sparse working graph over V(G*). The rotation engine adds edges
// to it one at a time, so adjacency lists stay sorted for O(log) membership
// tests.
class Gamma {
public:
    Gamma() = default;
    explicit Gamma(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    bool add_edge(int u, int v); // false when already present

    int out_degree_cap = 0;
    uint64_t seed = 0;
    int degree_floor_violations = 0; // vertices with < 2 eligible edges

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

// The sparse random subgraph used to start the rotation engine: every
// matching edge, all eligible edges of the SMALL vertices, and for every
// other vertex up to `cap` uniformly chosen edges towards vertices outside
// V(M). Deterministic under the seed.
Gamma build_gamma0(const Graph& gstar, const Matching& m, const std::vector<int>& small_in_gstar,
                   int cap, uint64_t seed);

enum class ExpanderMode { exact, sampled };

struct ExpanderParams {
    int samples_per_size = 200;
    uint64_t seed = 0;
    int max_exact_vertices = 24;
};

struct ExpanderVerdict {
    bool expander = false;          // sampled mode: "not falsified"
    bool sampled = false;
    std::vector<int> witness;       // a violating U when one was found
    long long subsets_checked = 0;
};

// Tests |N(U) \ V(M)| >= 2|U| for every U up to a quarter of the vertices.
// Exact mode enumerates every subset and is limited to small graphs;
// sampled mode checks singletons, random subsets on a geometric size
// schedule and low-degree clusters. A sampled pass is only "not falsified".
ExpanderVerdict is_m_expander(const Gamma& gamma, const Matching& m, ExpanderMode mode,
                              const ExpanderParams& params = {});

} // namespace pathcover
