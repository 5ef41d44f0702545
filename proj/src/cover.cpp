#include "pathcover/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "pathcover/hamilton.hpp"

namespace pathcover {

PathCover extract_cover(const Graph& g, const Reduction& r, const std::vector<int>& cycle) {
    Matching m = r.m_edges;
    CycleVerdict verdict = verify_m_cycle(cycle, r.gstar, m);
    if (!verdict.pass)
        throw std::invalid_argument("extract_cover: cycle failed verification: " +
                                    (verdict.violations.empty() ? std::string("?")
                                                                : verdict.violations.front()));

    const int k = static_cast<int>(cycle.size());
    std::vector<int> m_partner(r.gstar.vertex_count(), -1);
    for (auto [a, b] : m) {
        m_partner[a] = b;
        m_partner[b] = a;
    }

    // Canonical traversal: start at the smallest g-label, walk towards its
    // smaller cycle neighbour, so the output does not depend on the
    // engine's internal cycle orientation.
    int start = 0;
    for (int i = 1; i < k; ++i)
        if (r.to_g[cycle[i]] < r.to_g[cycle[start]]) start = i;
    int prev_nb = cycle[(start + k - 1) % k];
    int next_nb = cycle[(start + 1) % k];
    int step = (r.to_g[next_nb] <= r.to_g[prev_nb]) ? 1 : -1;

    std::vector<int> order(k);
    for (int i = 0; i < k; ++i)
        order[i] = cycle[((start + static_cast<long long>(step) * i) % k + k) % k];

    // C': the cycle in g labels with every matching edge replaced by the
    // 3-path through the degree-1 partners. cut[i] marks the edge leaving
    // position i as a lifted-matching edge.
    std::vector<int> cprime;
    std::vector<uint8_t> cut;
    for (int i = 0; i < k; ++i) {
        int a = order[i];
        int b = order[(i + 1) % k];
        cprime.push_back(r.to_g[a]);
        cut.push_back(0);
        if (m_partner[a] == b) {
            cprime.push_back(r.partner[a]);
            cut.push_back(1); // the lifted edge {partner[a], partner[b]}
            cprime.push_back(r.partner[b]);
            cut.push_back(0);
        }
    }

    const int len = static_cast<int>(cprime.size());
    PathCover cover;
    long long cuts = std::count(cut.begin(), cut.end(), 1);
    if (cuts == 0) {
        // No lifted matching: open the cycle at its lexicographically
        // smallest edge instead.
        int best = 0;
        auto key = [&](int i) {
            int u = cprime[i], v = cprime[(i + 1) % len];
            return std::make_pair(std::min(u, v), std::max(u, v));
        };
        for (int i = 1; i < len; ++i)
            if (key(i) < key(best)) best = i;
        cut[best] = 1;
    }
    // Split the closed walk at the cut edges.
    int first_cut = -1;
    for (int i = 0; i < len; ++i)
        if (cut[i]) {
            first_cut = i;
            break;
        }
    std::vector<int> current;
    for (int off = 1; off <= len; ++off) {
        int i = (first_cut + off) % len;
        current.push_back(cprime[i]);
        if (cut[i]) {
            cover.paths.push_back(current);
            current.clear();
        }
    }

    std::vector<uint8_t> covered(g.vertex_count(), 0);
    for (const auto& path : cover.paths)
        for (int v : path) covered[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) cover.paths.push_back({v});
    return cover;
}

CoverVerdict verify_cover(const Graph& g, const PathCover& cover) {
    CoverVerdict verdict;
    std::vector<int> seen(g.vertex_count(), 0);
    for (const auto& path : cover.paths) {
        if (path.empty()) {
            verdict.violations.push_back("empty path");
            continue;
        }
        for (int v : path) {
            if (v < 0 || v >= g.vertex_count()) {
                verdict.violations.push_back("label out of range: " + std::to_string(v));
                continue;
            }
            if (++seen[v] == 2)
                verdict.violations.push_back("vertex covered twice: " + std::to_string(v));
        }
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (path[i] < 0 || path[i + 1] < 0 || path[i] >= g.vertex_count() ||
                path[i + 1] >= g.vertex_count() || !g.has_edge(path[i], path[i + 1]))
                verdict.violations.push_back("non-edge in path: {" + std::to_string(path[i]) +
                                             "," + std::to_string(path[i + 1]) + "}");
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[v] == 0) {
            verdict.violations.push_back("vertex uncovered: " + std::to_string(v));
            break;
        }
    verdict.pass = verdict.violations.empty();
    return verdict;
}

long long lower_bound_mu(const Graph& g) {
    long long v0 = 0, v1 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0) ++v0;
        if (d == 1) ++v1;
    }
    return v0 + (v1 + 1) / 2;
}

namespace {

bool is_hamiltonian(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    // dp[mask] = endpoints v of paths that start at 0 and cover mask.
    std::vector<uint32_t> dp(1u << n, 0);
    dp[1] = 1;
    const uint32_t full = (1u << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t ends = dp[mask];
        if (!ends) continue;
        for (uint32_t e = ends; e;) {
            int v = std::countr_zero(e);
            e &= e - 1;
            uint32_t targets = adj[v] & ~mask;
            while (targets) {
                int u = std::countr_zero(targets);
                targets &= targets - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    return (dp[full] & adj[0]) != 0;
}

} // namespace

int exact_mu(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("exact_mu: n must be <= 16");
    if (n == 0) return 0;
    if (is_hamiltonian(g)) return 0;
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    const uint32_t full = (1u << n) - 1;
    // dp[mask][v] = minimum number of path segments covering exactly mask,
    // the last segment ending at v. Extending along an edge is free;
    // starting a new segment costs one.
    std::vector<uint8_t> dp(static_cast<size_t>(1u << n) * n, 0xFF);
    auto at = [&](uint32_t mask, int v) -> uint8_t& { return dp[static_cast<size_t>(mask) * n + v]; };
    for (int v = 0; v < n; ++v) at(1u << v, v) = 1;
    for (uint32_t mask = 1; mask <= full; ++mask)
        for (int v = 0; v < n; ++v) {
            uint8_t cur = at(mask, v);
            if (cur == 0xFF || !(mask & (1u << v))) continue;
            uint32_t ext = adj[v] & ~mask;
            for (uint32_t t = ext; t;) {
                int u = std::countr_zero(t);
                t &= t - 1;
                uint8_t& slot = at(mask | (1u << u), u);
                if (cur < slot) slot = cur;
            }
            for (uint32_t t = ~mask & full; t;) {
                int u = std::countr_zero(t);
                t &= t - 1;
                uint8_t& slot = at(mask | (1u << u), u);
                if (cur + 1 < slot) slot = cur + 1;
            }
        }
    uint8_t best = 0xFF;
    for (int v = 0; v < n; ++v) best = std::min(best, at(full, v));
    return best;
}

MuGapReport mu_gap(const Graph& g, const PathCover& cover, double c) {
    MuGapReport report;
    report.cover_size = cover.size();
    report.lower_bound = lower_bound_mu(g);
    report.target = 0.5 * c * std::exp(-c) * static_cast<double>(g.vertex_count());
    report.ratio_lower = static_cast<double>(report.cover_size) /
                         static_cast<double>(std::max<long long>(1, report.lower_bound));
    report.ratio_target = static_cast<double>(report.cover_size) / std::max(report.target, 1e-12);
    return report;
}

} // namespace pathcover
