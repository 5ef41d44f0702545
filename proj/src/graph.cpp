#include "pathcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

namespace pathcover {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex label out of range");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(edges.size());
    std::vector<int64_t> deg(static_cast<size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        ++deg[u + 1];
        ++deg[v + 1];
    }
    for (int v = 0; v < n; ++v) deg[v + 1] += deg[v];
    g.offsets_ = deg;
    g.adj_.resize(static_cast<size_t>(2) * edges.size());
    std::vector<int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end) throw std::invalid_argument("duplicate edge");
    }
    return g;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::to_edge_list() const {
    std::string out = std::to_string(n_) + ' ' + std::to_string(m_) + '\n';
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) {
                out += std::to_string(u);
                out += ' ';
                out += std::to_string(v);
                out += '\n';
            }
    return out;
}

namespace {

long long parse_int(const char*& p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\n' || *p == '\r' || *p == '\t')) ++p;
    long long value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p) throw std::invalid_argument("malformed edge list");
    p = next;
    return value;
}

} // namespace

Graph Graph::parse_edge_list(const std::string& text) {
    const char* p = text.data();
    const char* end = p + text.size();
    long long n = parse_int(p, end);
    long long m = parse_int(p, end);
    if (n < 0 || m < 0) throw std::invalid_argument("malformed edge list header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = static_cast<int>(parse_int(p, end));
        int v = static_cast<int>(parse_int(p, end));
        edges.emplace_back(u, v);
    }
    while (p != end && (*p == ' ' || *p == '\n' || *p == '\r' || *p == '\t')) ++p;
    if (p != end) throw std::invalid_argument("trailing data in edge list");
    return from_edges(static_cast<int>(n), edges);
}

int degree_into(const Graph& g, int v, const std::vector<uint8_t>& in_set) {
    int count = 0;
    for (int u : g.neighbors(v)) count += in_set[u] ? 1 : 0;
    return count;
}

int degree_into(const Graph& g, int v, const std::vector<int>& sorted_set) {
    int count = 0;
    for (int u : g.neighbors(v))
        count += std::binary_search(sorted_set.begin(), sorted_set.end(), u) ? 1 : 0;
    return count;
}

std::vector<std::pair<int, int>> bounded_bfs(const Graph& g, int v, int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    std::vector<std::pair<int, int>> result;
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> queue;
    dist[v] = 0;
    queue.push(v);
    result.emplace_back(v, 0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        if (dist[u] == radius) continue;
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                result.emplace_back(w, dist[w]);
                queue.push(w);
            }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> k_core(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative k");
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<uint8_t> removed(n, 0);
    std::queue<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            removed[v] = 1;
            queue.push(v);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u : g.neighbors(v))
            if (!removed[u] && --deg[u] < k) {
                removed[u] = 1;
                queue.push(u);
            }
    }
    std::vector<int> core;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) core.push_back(v);
    return core;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> comps;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        std::vector<int> comp{start};
        label[start] = static_cast<int>(comps.size());
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u))
                if (label[w] < 0) {
                    label[w] = label[start];
                    comp.push_back(w);
                    queue.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

std::vector<uint8_t> set_flags(int n, const std::vector<int>& sorted_set) {
    std::vector<uint8_t> flags(n, 0);
    for (int v : sorted_set) flags[v] = 1;
    return flags;
}

} // namespace pathcover
