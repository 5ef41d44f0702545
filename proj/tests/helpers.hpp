#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "pathcover/expander.hpp"
#include "pathcover/graph.hpp"

// Small handmade graphs and independent brute-force oracles used across the
// test suites. Everything here is deliberately naive; these are the
// references the library is checked against.
namespace testutil {

using pathcover::Gamma;
using pathcover::Graph;
using pathcover::Matching;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// Star with the centre labelled 0 and `leaves` leaves.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

inline Gamma gamma_of(const Graph& g) {
    Gamma gamma(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) gamma.add_edge(v, u);
    return gamma;
}

// Exhaustive minimal X: the smallest vertex set such that every vertex
// outside it has at most one neighbour in SMALL ∪ X. n <= ~20.
inline std::vector<int> minimal_x_brute(const Graph& g, const std::vector<int>& small) {
    const int n = g.vertex_count();
    uint32_t small_mask = 0;
    for (int v : small) small_mask |= 1u << v;
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    auto valid = [&](uint32_t x_mask) {
        uint32_t target = small_mask | x_mask;
        for (int v = 0; v < n; ++v) {
            if (x_mask & (1u << v)) continue;
            if (std::popcount(adj[v] & target) > 1) return false;
        }
        return true;
    };
    uint32_t best = (1u << n) - 1;
    int best_size = n + 1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) < best_size && valid(mask)) {
            best = mask;
            best_size = std::popcount(mask);
        }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (best & (1u << v)) out.push_back(v);
    return out;
}

namespace detail {

inline std::vector<uint32_t> adjacency_masks(const Gamma& gamma) {
    std::vector<uint32_t> adj(gamma.vertex_count(), 0);
    for (int v = 0; v < gamma.vertex_count(); ++v)
        for (int u : gamma.neighbors(v)) adj[v] |= 1u << u;
    return adj;
}

inline std::vector<int> partner_array(int n, const Matching& m) {
    std::vector<int> partner(n, -1);
    for (auto [a, b] : m) {
        partner[a] = b;
        partner[b] = a;
    }
    return partner;
}

} // namespace detail

// Longest M-path (vertex count) by subset DP. Appending a matched vertex is
// only legal when its partner is still outside or is the current endpoint;
// a state counts only when no matching edge is half-covered.
inline int longest_m_path_brute(const Gamma& gamma, const Matching& m) {
    const int n = gamma.vertex_count();
    if (n == 0) return 0;
    auto adj = detail::adjacency_masks(gamma);
    auto partner = detail::partner_array(n, m);
    auto finalizable = [&](uint32_t mask) {
        for (auto [a, b] : m) {
            bool a_in = mask & (1u << a), b_in = mask & (1u << b);
            if (a_in != b_in) return false;
        }
        return true;
    };
    std::vector<std::vector<uint8_t>> dp(1u << n, std::vector<uint8_t>(n, 0));
    for (int v = 0; v < n; ++v) dp[1u << v][v] = 1;
    int best = 0;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool fin = finalizable(mask);
        for (int v = 0; v < n; ++v) {
            if (!dp[mask][v]) continue;
            if (fin) best = std::max(best, std::popcount(mask));
            uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                if (partner[u] >= 0 && partner[u] != v && (mask & (1u << partner[u]))) continue;
                dp[mask | (1u << u)][u] = 1;
            }
        }
    }
    return best;
}

// Exhaustive Hamilton M-cycle test. With a nonempty matching the path is
// rooted at the lowest matched vertex followed by its partner, which every
// Hamilton M-cycle can be rotated and reflected into.
inline bool is_m_hamiltonian_brute(const Gamma& gamma, const Matching& m) {
    const int n = gamma.vertex_count();
    if (n < 3) return false;
    auto adj = detail::adjacency_masks(gamma);
    auto partner = detail::partner_array(n, m);
    int root = 0;
    uint32_t init_mask;
    int init_end;
    if (!m.empty()) {
        root = n;
        for (auto [a, b] : m) root = std::min({root, a, b});
        init_mask = (1u << root) | (1u << partner[root]);
        init_end = partner[root];
        if (!gamma.has_edge(root, partner[root])) return false;
    } else {
        init_mask = 1u << root;
        init_end = root;
    }
    std::vector<std::vector<uint8_t>> dp(1u << n, std::vector<uint8_t>(n, 0));
    dp[init_mask][init_end] = 1;
    const uint32_t full = (1u << n) - 1;
    for (uint32_t mask = init_mask; mask <= full; ++mask)
        for (int v = 0; v < n; ++v) {
            if (!dp[mask][v]) continue;
            uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = std::countr_zero(ext);
                ext &= ext - 1;
                if (partner[u] >= 0 && partner[u] != v && (mask & (1u << partner[u]))) continue;
                dp[mask | (1u << u)][u] = 1;
            }
        }
    for (int v = 0; v < n; ++v)
        if (dp[full][v] && (adj[v] & (1u << root))) return true;
    return false;
}

// Path cover number by brute force over vertex orderings (n <= 8): for a
// fixed ordering the segments are forced by the non-edges.
inline int naive_mu(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    bool hamiltonian = false;
    do {
        int segments = 1;
        bool closed = n >= 3 && g.has_edge(perm[n - 1], perm[0]);
        for (int i = 0; i + 1 < n; ++i)
            if (!g.has_edge(perm[i], perm[i + 1])) {
                ++segments;
                closed = false;
            }
        if (closed) hamiltonian = true;
        best = std::min(best, segments);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return hamiltonian ? 0 : best;
}

} // namespace testutil
