#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pathcover {

// Implicit treap over the rotation engine's current path, with lazy segment
// reversal. A path visits each vertex at most once, so node ids are vertex
// labels. rotate_at splits after the pivot and reverses the tail in
// O(log n); applying the same rotation again undoes it, which is what makes
// walking around the rotation tree cheap.
class PathTreap {
public:
    explicit PathTreap(int capacity);

    void build(const std::vector<int>& vertices);
    void append(int v);
    void reverse_all();

    // (v0..pivot, tail) -> (v0..pivot, reversed tail). Tail must be nonempty.
    void rotate_at(int pivot);

    // Treats the path as a cycle closed by the virtual edge last->first and
    // removes the path edge {x, successor(x)}: the result starts at the old
    // successor and ends at x. Breaking after the last vertex removes the
    // virtual edge, i.e. leaves the path unchanged.
    void cycle_break_after(int x);

    bool on_path(int v) const { return in_tree_[v] != 0; }
    int size() const { return root_ < 0 ? 0 : size_[root_]; }
    bool empty() const { return root_ < 0; }

    int first();
    int last();
    int successor(int v);   // -1 past the tail
    int predecessor(int v); // -1 before the head
    std::vector<int> to_vector();

private:
    void push(int t);
    void pull(int t);
    void access(int v);
    int rank_of(int v); // 1-based; call access(v) first
    std::pair<int, int> split(int t, int k);
    int merge(int a, int b);
    int walk_end(int t, bool leftmost);
    void fix_sizes(int t);

    std::vector<int> left_, right_, parent_, size_;
    std::vector<uint8_t> rev_, in_tree_;
    std::vector<uint64_t> prio_;
    std::vector<int> chain_;
    int root_ = -1;
};

} // namespace pathcover
