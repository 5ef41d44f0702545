#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/expander.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

// A path that respects the matching: every matching edge is either an edge
// of the path or disjoint from its vertex set.
struct MPath {
    std::vector<int> vertices;
};

bool is_m_path(const MPath& p, const Gamma& gamma, const Matching& m);

// Per-matching-edge flags: true when fully contained as a path edge, false
// when disjoint from the path. Throws when an edge is neither.
std::vector<bool> m_edge_flags(const MPath& p, const Matching& m);

// The rotation (v0..v_i, v_{i+1}..v_l) -> (v0..v_i, v_l..v_{i+1}) using the
// chord {v_i, v_l}. Requires 0 < pivot_index < l-1, the chord present in
// gamma, and the pivot outside V(M); throws std::invalid_argument otherwise.
MPath rotate(const MPath& p, int pivot_index, const Gamma& gamma, const Matching& m);

// Endpoints reachable from p by matching-respecting rotations that keep the
// first vertex fixed. Each endpoint is found once, breadth-first, and keeps
// a predecessor record from which its path can be rebuilt.
struct RotationState {
    int fixed_end = -1;
    MPath base;
    std::vector<int> end_set; // sorted; contains the base free endpoint

    struct Record {
        int parent = -1; // endpoint the rotation was applied from
        int pivot = -1;
    };
    std::map<int, Record> records;

    // Reapplies the recorded pivot chain to the base path.
    MPath reconstruct(int endpoint) const;
};

RotationState compute_end_set(const MPath& p, const Gamma& gamma, const Matching& m);

// Grows p until no endpoint reachable by rotations has a neighbour off the
// path. Appending a matched vertex pulls in its partner immediately so the
// result stays an M-path.
MPath extend_maximal(const MPath& p, const Gamma& gamma, const Matching& m);

// Searches E(G*) \ E(gamma) for an edge joining an endpoint u reachable
// from p (ascending label order) to an endpoint reachable from p_u when u
// is held fixed. Requires p maximal to be useful; returns nullopt when the
// double search is exhausted.
std::optional<std::pair<int, int>> find_booster(const MPath& p, const Gamma& gamma,
                                                const Graph& gstar, const Matching& m);

struct HamiltonResult {
    bool success = false;
    std::vector<int> cycle; // gstar labels; closing edge implied last->first
    long long boosters_used = 0;
    int longest_path = 0;   // vertices on the longest path reached
    std::string failure_reason;
};

// The booster-absorption loop: grow a maximal M-path in a working copy of
// gamma0, close it into a cycle through a gamma chord or a booster from
// E(G*), re-open non-spanning cycles through an outgoing edge, and repeat
// until the cycle spans V(G*) or the booster budget is exhausted. Failure
// is a value, not an exception; the caller decides about retrying with a
// fresh gamma0.
HamiltonResult hamilton_m_cycle(const Graph& gstar, const Matching& m, const Gamma& gamma0,
                                long long budget);

struct CycleVerdict {
    bool pass = false;
    std::vector<std::string> violations;
};

// Spanning, edge-valid (including the closing edge), and containing every
// matching edge as a consecutive pair.
CycleVerdict verify_m_cycle(const std::vector<int>& cycle, const Graph& gstar,
                            const Matching& m);

} // namespace pathcover
