#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathcover {

// Immutable undirected simple graph on vertex labels {0, ..., n-1}, stored
// as CSR with sorted adjacency lists. Sorted lists make neighbourhood
// queries binary searches and give equal graphs identical representations.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops, duplicate edges or
    // out-of-range endpoints. Edge orientation does not matter.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    int degree(int v) const;

    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(int u, int v) const;

    // Plain-text edge list: first line "n m", then one "u v" line per edge
    // with u < v, sorted lexicographically. Round-trips bit-exactly.
    std::string to_edge_list() const;
    static Graph parse_edge_list(const std::string& text);

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    long long m_ = 0;
    std::vector<int64_t> offsets_{0};
    std::vector<int> adj_;
};

// Number of neighbours of v inside the set (flag form; in_set.size() == n).
int degree_into(const Graph& g, int v, const std::vector<uint8_t>& in_set);

// Same with the set given as a sorted vertex list.
int degree_into(const Graph& g, int v, const std::vector<int>& sorted_set);

// All vertices at distance <= radius from v with their exact distances,
// sorted by vertex label. dist(v, v) = 0 here; the cycle-through-v
// convention is applied by callers that need it.
std::vector<std::pair<int, int>> bounded_bfs(const Graph& g, int v, int radius);

// The unique maximal S such that every vertex of S has >= k neighbours in
// S, computed by peeling. Sorted; may be empty.
std::vector<int> k_core(const Graph& g, int k);

// Connected components, each sorted, ordered by decreasing size with ties
// broken by smallest contained label.
std::vector<std::vector<int>> components(const Graph& g);

// Convenience for set handling: membership flags of a sorted vertex list.
std::vector<uint8_t> set_flags(int n, const std::vector<int>& sorted_set);

} // namespace pathcover
