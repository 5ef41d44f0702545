#include "pathcover/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "pathcover/analytics.hpp"

namespace pathcover {

std::vector<int> connected_two_core(const Graph& g) {
    auto comps = components(g);
    if (comps.empty()) return {};
    if (comps.size() >= 2 && comps[0].size() == comps[1].size()) return {};
    std::vector<uint8_t> in_largest = set_flags(g.vertex_count(), comps[0]);
    // Peeling never crosses components, so the core of the largest
    // component is the global 2-core restricted to it.
    std::vector<int> core;
    for (int v : k_core(g, 2))
        if (in_largest[v]) core.push_back(v);
    return core;
}

Reduction build_gstar(const Graph& g, const Classification& cls, const std::vector<int>& c2) {
    const int n = g.vertex_count();
    Reduction r;
    r.c2_vertices = c2;

    std::vector<uint8_t> excluded(n, 0);
    for (int v : cls.close) excluded[v] = 1;
    for (int v : cls.bad) excluded[v] = 1;

    std::vector<uint8_t> in_gstar(n, 0);
    for (int v : c2)
        if (!excluded[v]) {
            in_gstar[v] = 1;
            r.to_g.push_back(v);
        }
    r.to_gstar.assign(n, -1);
    for (size_t i = 0; i < r.to_g.size(); ++i) r.to_gstar[r.to_g[i]] = static_cast<int>(i);
    const int k = static_cast<int>(r.to_g.size());

    // Eligible matching support: neighbours of V1 \ CLOSE inside V(G*),
    // each required to have exactly one degree-1 neighbour outside CLOSE.
    std::vector<uint8_t> is_close = set_flags(n, cls.close);
    std::vector<uint8_t> v1_out_close(n, 0);
    for (int v : cls.v1)
        if (!is_close[v]) v1_out_close[v] = 1;
    std::vector<int> eligible;
    std::vector<int> partner_g(n, -1);
    for (int v : cls.v1) {
        if (is_close[v]) continue;
        for (int u : g.neighbors(v))
            if (!v1_out_close[u] && in_gstar[u]) {
                if (partner_g[u] == -1) eligible.push_back(u);
                partner_g[u] = (partner_g[u] == -1) ? v : -2; // -2 marks multiples
            }
    }
    std::sort(eligible.begin(), eligible.end());
    std::vector<int> support;
    for (int u : eligible) {
        if (partner_g[u] == -2) {
            ++r.diagnostics.dropped_from_matching;
            partner_g[u] = -1;
        } else {
            support.push_back(u);
        }
    }
    if (support.size() % 2 == 1) {
        // All vertices pair up except possibly the largest one.
        r.diagnostics.unpaired = 1;
        partner_g[support.back()] = -1;
        support.pop_back();
    }

    r.partner.assign(k, -1);
    for (size_t i = 0; i + 1 < support.size(); i += 2) {
        int a = r.to_gstar[support[i]];
        int b = r.to_gstar[support[i + 1]];
        r.m_edges.emplace_back(std::min(a, b), std::max(a, b));
        r.partner[a] = partner_g[support[i]];
        r.partner[b] = partner_g[support[i + 1]];
    }

    // E(G*) = induced edges plus the matching.
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < k; ++a) {
        int v = r.to_g[a];
        for (int u : g.neighbors(v)) {
            int b = r.to_gstar[u];
            if (b > a) edges.emplace_back(a, b);
        }
    }
    std::vector<uint8_t> in_vm(k, 0);
    std::vector<int> m_partner_gstar(k, -1);
    for (auto [a, b] : r.m_edges) {
        in_vm[a] = in_vm[b] = 1;
        m_partner_gstar[a] = b;
        m_partner_gstar[b] = a;
    }
    {
        std::vector<std::pair<int, int>> induced_edges = edges;
        std::sort(induced_edges.begin(), induced_edges.end());
        for (auto [a, b] : r.m_edges)
            if (!std::binary_search(induced_edges.begin(), induced_edges.end(),
                                    std::make_pair(a, b)))
                edges.emplace_back(a, b);
        for (auto [a, b] : induced_edges)
            if (in_vm[a] && in_vm[b] && m_partner_gstar[a] != b)
                ++r.diagnostics.matching_adjacent_pairs;
    }
    r.gstar = Graph::from_edges(k, edges);

    for (int v = 0; v < k; ++v) {
        int outside = 0;
        for (int u : r.gstar.neighbors(v))
            if (!in_vm[u]) ++outside;
        if (outside < 2) ++r.diagnostics.degree_floor_violations;
    }

    r.m_prime = lift_matching(r);
    for (auto [a, b] : r.m_prime) {
        r.v1_star.push_back(a);
        r.v1_star.push_back(b);
    }
    std::sort(r.v1_star.begin(), r.v1_star.end());
    for (auto it = std::adjacent_find(r.v1_star.begin(), r.v1_star.end());
         it != r.v1_star.end(); it = std::adjacent_find(it + 1, r.v1_star.end()))
        ++r.diagnostics.lift_violations;
    // Degree-1 vertices cannot survive 2-core peeling, so the lifted
    // endpoints must be disjoint from V(G*) (and in particular from V(M)).
    for (int v : r.v1_star)
        if (r.to_gstar[v] >= 0) ++r.diagnostics.lift_violations;
    return r;
}

std::vector<std::pair<int, int>> lift_matching(const Reduction& r) {
    std::vector<std::pair<int, int>> lifted;
    lifted.reserve(r.m_edges.size());
    for (auto [a, b] : r.m_edges) lifted.emplace_back(r.partner[a], r.partner[b]);
    return lifted;
}

bool ReductionSizeReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

ReductionSizeReport check_reduction_sizes(const Reduction& r, double c, long long n,
                                          const ReductionSizeParams& params) {
    ReductionSizeReport report;
    const double nd = static_cast<double>(n);
    const double ce = c * std::exp(-c);

    {
        ReductionSizeCheck check;
        check.name = "gstar_size";
        check.measured = static_cast<double>(r.to_g.size());
        check.bound = (1.0 - (1.0 + params.epsilon / 4.0) * ce) * nd;
        check.pass = check.measured >= check.bound;
        report.checks.push_back(check);
    }
    {
        ReductionSizeCheck check;
        check.name = "matching_size";
        check.measured = static_cast<double>(2 * r.m_edges.size());
        check.bound = (1.0 - params.epsilon / 4.0) * ce * nd;
        check.pass = check.measured >= check.bound;
        report.checks.push_back(check);
    }
    {
        ReductionSizeCheck check;
        check.name = "two_core_size";
        if (r.c2_vertices.empty()) {
            check.applicable = false;
        } else if (c > 1.0) {
            check.measured = static_cast<double>(r.c2_vertices.size());
            check.bound = predict_two_core_size(c, n);
            check.pass = std::fabs(check.measured - check.bound) <=
                         params.c2_rel_tol * std::max(check.bound, 1.0);
        } else {
            check.applicable = false;
        }
        report.checks.push_back(check);
    }
    return report;
}

} // namespace pathcover
