#include "pathcover/classify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "pathcover/rng.hpp"

namespace pathcover {

Thresholds Thresholds::for_mean_degree(double c) {
    Thresholds t;
    t.small_deg = std::max(2, static_cast<int>(std::floor(c / 1000.0)));
    t.large_deg = static_cast<int>(std::ceil(20.0 * c));
    t.close_radius = 4;
    return t;
}

void Thresholds::validate() const {
    if (small_deg < 2) throw std::invalid_argument("Thresholds: small_deg must be >= 2");
    if (close_radius < 1) throw std::invalid_argument("Thresholds: close_radius must be >= 1");
}

BasicClasses classify_basic(const Graph& g, const Thresholds& t) {
    t.validate();
    const int n = g.vertex_count();
    BasicClasses out;
    std::vector<uint8_t> is_v1(n, 0);
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 0) out.v0.push_back(v);
        if (d == 1) {
            out.v1.push_back(v);
            is_v1[v] = 1;
        }
        if (d > t.large_deg) out.large.push_back(v);
    }
    std::vector<uint8_t> in_nbhd(n, 0);
    for (int v : out.v1)
        for (int u : g.neighbors(v))
            if (!is_v1[u]) in_nbhd[u] = 1;
    for (int v = 0; v < n; ++v)
        if (in_nbhd[v]) out.n_v1_neighbours.push_back(v);
    return out;
}

std::vector<int> compute_small(const Graph& g, const Thresholds& t,
                               const std::vector<int>& n_v1_neighbours) {
    const int n = g.vertex_count();
    std::vector<uint8_t> outside = set_flags(n, n_v1_neighbours);
    for (auto& f : outside) f = !f; // complement: V \ N(V1)
    std::vector<int> small;
    for (int v = 0; v < n; ++v)
        if (degree_into(g, v, outside) < t.small_deg) small.push_back(v);
    return small;
}

namespace {

// Minimal length of a cycle through v, or -1 when none of length <= cap
// exists. Checks every neighbour pair via a BFS in G - v; cap is tiny (the
// close radius), so the search depth is at most cap - 2.
int cycle_through_within(const Graph& g, int v, int cap) {
    auto nbrs = g.neighbors(v);
    if (nbrs.size() < 2 || cap < 3) return -1;
    int best = -1;
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> touched;
    for (size_t i = 0; i + 1 < nbrs.size(); ++i) {
        int a = nbrs[i];
        int limit = cap - 2;
        dist[a] = 0;
        touched.push_back(a);
        std::queue<int> queue;
        queue.push(a);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            if (dist[u] == limit) continue;
            for (int w : g.neighbors(u)) {
                if (w == v || dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                touched.push_back(w);
                queue.push(w);
            }
        }
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            int b = nbrs[j];
            if (dist[b] >= 0) {
                int len = dist[b] + 2;
                if (best < 0 || len < best) best = len;
            }
        }
        for (int u : touched) dist[u] = -1;
        touched.clear();
        if (best == 3) break;
    }
    return (best >= 0 && best <= cap) ? best : -1;
}

} // namespace

std::vector<int> compute_close(const Graph& g, const Thresholds& t,
                               const std::vector<int>& small) {
    const int n = g.vertex_count();
    std::vector<uint8_t> is_small = set_flags(n, small);
    std::vector<int> close;
    for (int v : small) {
        bool found = false;
        for (auto [u, d] : bounded_bfs(g, v, t.close_radius))
            if (u != v && is_small[u]) {
                found = true;
                break;
            }
        if (!found) found = cycle_through_within(g, v, t.close_radius) > 0;
        if (found) close.push_back(v);
    }
    return close;
}

std::vector<int> compute_x_scanning(const Graph& g, const std::vector<int>& small,
                                    const std::vector<int>& scan_order) {
    const int n = g.vertex_count();
    std::vector<int> rank(n);
    for (int v = 0; v < n; ++v) rank[v] = v;
    for (size_t i = 0; i < scan_order.size(); ++i) rank[scan_order[i]] = static_cast<int>(i);

    std::vector<uint8_t> in_target = set_flags(n, small); // SMALL ∪ X
    std::vector<uint8_t> in_x(n, 0);
    std::vector<int> deg_target(n, 0);
    using Entry = std::pair<int, int>; // (rank, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> candidates;
    for (int v = 0; v < n; ++v) {
        deg_target[v] = degree_into(g, v, in_target);
        if (deg_target[v] >= 2) candidates.emplace(rank[v], v);
    }
    std::vector<int> x;
    while (!candidates.empty()) {
        auto [r, v] = candidates.top();
        candidates.pop();
        if (in_x[v]) continue;
        in_x[v] = 1;
        x.push_back(v);
        if (!in_target[v]) {
            in_target[v] = 1;
            for (int u : g.neighbors(v))
                if (++deg_target[u] == 2 && !in_x[u]) candidates.emplace(rank[u], u);
        }
    }
    std::sort(x.begin(), x.end());
    return x;
}

std::vector<int> compute_x(const Graph& g, const std::vector<int>& small) {
    return compute_x_scanning(g, small, {});
}

BadSets compute_bad(const Graph& g, const std::vector<int>& small) {
    BadSets out;
    out.x = compute_x(g, small);
    const int n = g.vertex_count();
    std::vector<uint8_t> in_x = set_flags(n, out.x);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2 && degree_into(g, v, in_x) == 1) out.y.push_back(v);
    out.bad = out.x;
    out.bad.insert(out.bad.end(), out.y.begin(), out.y.end());
    std::sort(out.bad.begin(), out.bad.end());
    out.bad.erase(std::unique(out.bad.begin(), out.bad.end()), out.bad.end());
    return out;
}

Classification classify(const Graph& g, const Thresholds& t) {
    Classification cls;
    BasicClasses basic = classify_basic(g, t);
    cls.v0 = std::move(basic.v0);
    cls.v1 = std::move(basic.v1);
    cls.large = std::move(basic.large);
    cls.n_v1_neighbours = std::move(basic.n_v1_neighbours);
    cls.small = compute_small(g, t, cls.n_v1_neighbours);
    cls.close = compute_close(g, t, cls.small);
    BadSets bad = compute_bad(g, cls.small);
    cls.x = std::move(bad.x);
    cls.y = std::move(bad.y);
    cls.bad = std::move(bad.bad);
    return cls;
}

bool PropertyReport::all_pass() const {
    for (const auto& c : checks)
        if (c.applicable && !c.pass) return false;
    return true;
}

const PropertyCheck* PropertyReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

long long edges_within(const Graph& g, const std::vector<int>& set,
                       std::vector<uint8_t>& flags) {
    for (int v : set) flags[v] = 1;
    long long count = 0;
    for (int v : set) count += degree_into(g, v, flags);
    for (int v : set) flags[v] = 0;
    return count / 2;
}

long long edges_between(const Graph& g, const std::vector<int>& u_set,
                        const std::vector<int>& w_set, std::vector<uint8_t>& flags) {
    for (int v : w_set) flags[v] = 1;
    long long count = 0;
    for (int v : u_set) count += degree_into(g, v, flags);
    for (int v : w_set) flags[v] = 0;
    return count;
}

std::vector<int> sample_subset(Rng& rng, int n, int size, std::vector<int>& pool) {
    // Partial Fisher-Yates on a persistent pool of all vertices.
    std::vector<int> out;
    out.reserve(size);
    for (int i = 0; i < size; ++i) {
        size_t j = i + rng.next_below(static_cast<uint64_t>(n - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

std::vector<int> by_degree(const Graph& g, bool ascending) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return ascending ? g.degree(a) < g.degree(b) : g.degree(a) > g.degree(b);
    });
    return order;
}

std::vector<int> take(const std::vector<int>& v, size_t count) {
    return {v.begin(), v.begin() + std::min(count, v.size())};
}

} // namespace

PropertyReport check_properties(const Graph& g, const Classification& cls, double c,
                                const PropertyCheckConfig& config) {
    const long long n = g.vertex_count();
    const double nd = static_cast<double>(n);
    const double slack = config.slack;
    PropertyReport report;

    auto upper = [&](const std::string& name, double measured, double bound) {
        PropertyCheck check;
        check.name = name;
        check.measured = measured;
        check.bound = bound * slack;
        check.pass = measured <= check.bound;
        report.checks.push_back(check);
    };

    // Degree-1 count window.
    {
        PropertyCheck check;
        check.name = "P1";
        double center = c * std::exp(-c) * nd;
        double delta = std::pow(nd, -0.4);
        check.measured = static_cast<double>(cls.v1.size());
        check.bound = center * (1.0 + delta) * slack;
        double lower = center * (1.0 - delta) / slack;
        check.pass = check.measured >= lower && check.measured <= check.bound;
        check.note = "lower bound " + std::to_string(lower);
        report.checks.push_back(check);
    }
    upper("P2", static_cast<double>(cls.small.size()), std::exp(-0.9 * c) * nd);
    upper("P3", static_cast<double>(cls.large.size()), 1e-6 * nd);
    upper("P4", static_cast<double>(cls.close.size()), std::exp(-1.8 * c) * nd);
    upper("BAD", static_cast<double>(cls.bad.size()), 3.0 * std::sqrt(c) * std::exp(-c) * nd);

    Rng rng = Rng(config.seed).substream(RngStream::property_check);
    std::vector<uint8_t> scratch(n, 0);
    std::vector<int> pool(n);
    for (int v = 0; v < n; ++v) pool[v] = v;

    // Subset edge-density cap: every U with |U| <= 1e-5 n spans fewer than
    // 1e-4 c |U| edges. Sampled; a pass only means "not falsified".
    {
        PropertyCheck check;
        check.name = "P5";
        check.sampled = true;
        const long long cap = static_cast<long long>(std::floor(1e-5 * nd));
        if (cap < 1 || n == 0) {
            check.applicable = false;
            check.note = "n too small for the stated subset size";
        } else {
            std::vector<std::vector<int>> candidates;
            std::vector<int> sizes;
            for (long long s = 1; s <= cap; s *= 2) sizes.push_back(static_cast<int>(s));
            if (sizes.back() != cap) sizes.push_back(static_cast<int>(cap));
            int per_size = std::max(1, config.subset_samples / static_cast<int>(sizes.size()));
            for (int s : sizes)
                for (int i = 0; i < per_size; ++i)
                    candidates.push_back(sample_subset(rng, static_cast<int>(n), s, pool));
            auto asc = by_degree(g, true);
            auto desc = by_degree(g, false);
            candidates.push_back(take(asc, cap));
            candidates.push_back(take(desc, cap));
            candidates.push_back(take(cls.small, cap));
            candidates.push_back(take(cls.bad, cap));
            candidates.push_back(take(cls.close, cap));
            for (int i = 0; i < 5 && i < n; ++i) {
                std::vector<int> ball{desc[i]};
                for (int u : g.neighbors(desc[i])) ball.push_back(u);
                std::sort(ball.begin(), ball.end());
                candidates.push_back(take(ball, cap));
            }
            double worst = 0.0;
            for (const auto& u_set : candidates) {
                if (u_set.empty()) continue;
                double density = static_cast<double>(edges_within(g, u_set, scratch)) /
                                 static_cast<double>(u_set.size());
                worst = std::max(worst, density);
            }
            check.measured = worst;            // worst e(U)/|U| seen
            check.bound = 1e-4 * c * slack;
            check.pass = check.measured < check.bound;
            check.note = check.pass ? "not falsified (sampled)" : "violating subset found";
        }
        report.checks.push_back(check);
    }

    // Cross-edge floor between disjoint U (1e-6 n) and W (n/5).
    {
        PropertyCheck check;
        check.name = "P6";
        check.sampled = true;
        const long long u_size = static_cast<long long>(std::floor(1e-6 * nd));
        const long long w_size = n / 5;
        if (u_size < 1 || w_size < 1 || u_size + w_size > n) {
            check.applicable = false;
            check.note = "n too small for the stated subset sizes";
        } else {
            double worst = -1.0;
            int rounds = std::max(1, config.subset_samples / 10);
            for (int i = 0; i < rounds; ++i) {
                auto both = sample_subset(rng, static_cast<int>(n),
                                          static_cast<int>(u_size + w_size), pool);
                std::vector<int> u_set(both.begin(), both.begin() + u_size);
                std::vector<int> w_set(both.begin() + u_size, both.end());
                double e = static_cast<double>(edges_between(g, u_set, w_set, scratch));
                if (worst < 0.0 || e < worst) worst = e;
            }
            auto asc = by_degree(g, true);
            std::vector<int> u_set = take(asc, u_size);
            std::vector<int> w_set(asc.begin() + u_size, asc.begin() + u_size + w_size);
            double e = static_cast<double>(edges_between(g, u_set, w_set, scratch));
            if (worst < 0.0 || e < worst) worst = e;
            check.measured = worst;
            check.bound = 1e-7 * c * nd / slack;
            check.pass = check.measured >= check.bound;
            check.note = check.pass ? "not falsified (sampled)" : "violating pair found";
        }
        report.checks.push_back(check);
    }

    return report;
}

} // namespace pathcover
