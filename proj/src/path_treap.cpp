#include "pathcover/path_treap.hpp"

#include <stdexcept>

#include "pathcover/rng.hpp"

namespace pathcover {

PathTreap::PathTreap(int capacity)
    : left_(capacity, -1),
      right_(capacity, -1),
      parent_(capacity, -1),
      size_(capacity, 0),
      rev_(capacity, 0),
      in_tree_(capacity, 0),
      prio_(capacity) {
    for (int v = 0; v < capacity; ++v) {
        uint64_t s = static_cast<uint64_t>(v) + 0x51ED2700214354A7ULL;
        prio_[v] = splitmix64(s);
    }
}

void PathTreap::push(int t) {
    if (rev_[t]) {
        std::swap(left_[t], right_[t]);
        if (left_[t] >= 0) rev_[left_[t]] ^= 1;
        if (right_[t] >= 0) rev_[right_[t]] ^= 1;
        rev_[t] = 0;
    }
}

void PathTreap::pull(int t) {
    size_[t] = 1;
    if (left_[t] >= 0) {
        size_[t] += size_[left_[t]];
        parent_[left_[t]] = t;
    }
    if (right_[t] >= 0) {
        size_[t] += size_[right_[t]];
        parent_[right_[t]] = t;
    }
}

void PathTreap::access(int v) {
    chain_.clear();
    for (int x = v; x >= 0; x = parent_[x]) chain_.push_back(x);
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) push(*it);
}

int PathTreap::rank_of(int v) {
    int r = (left_[v] >= 0 ? size_[left_[v]] : 0) + 1;
    for (int x = v; parent_[x] >= 0; x = parent_[x]) {
        int p = parent_[x];
        if (right_[p] == x) r += (left_[p] >= 0 ? size_[left_[p]] : 0) + 1;
    }
    return r;
}

std::pair<int, int> PathTreap::split(int t, int k) {
    if (t < 0) return {-1, -1};
    push(t);
    int left_size = left_[t] >= 0 ? size_[left_[t]] : 0;
    if (left_size + 1 <= k) {
        auto [a, b] = split(right_[t], k - left_size - 1);
        right_[t] = a;
        pull(t);
        parent_[t] = -1;
        if (b >= 0) parent_[b] = -1;
        return {t, b};
    }
    auto [a, b] = split(left_[t], k);
    left_[t] = b;
    pull(t);
    parent_[t] = -1;
    if (a >= 0) parent_[a] = -1;
    return {a, t};
}

int PathTreap::merge(int a, int b) {
    if (a < 0) {
        if (b >= 0) parent_[b] = -1;
        return b;
    }
    if (b < 0) {
        parent_[a] = -1;
        return a;
    }
    if (prio_[a] > prio_[b]) {
        push(a);
        right_[a] = merge(right_[a], b);
        pull(a);
        parent_[a] = -1;
        return a;
    }
    push(b);
    left_[b] = merge(a, left_[b]);
    pull(b);
    parent_[b] = -1;
    return b;
}

void PathTreap::fix_sizes(int t) {
    if (t < 0) return;
    fix_sizes(left_[t]);
    fix_sizes(right_[t]);
    pull(t);
}

void PathTreap::build(const std::vector<int>& vertices) {
    const int cap = static_cast<int>(left_.size());
    left_.assign(cap, -1);
    right_.assign(cap, -1);
    parent_.assign(cap, -1);
    size_.assign(cap, 0);
    rev_.assign(cap, 0);
    in_tree_.assign(cap, 0);
    root_ = -1;
    std::vector<int> spine;
    for (int v : vertices) {
        if (in_tree_[v]) throw std::invalid_argument("PathTreap: repeated vertex");
        in_tree_[v] = 1;
        size_[v] = 1;
        int last_popped = -1;
        while (!spine.empty() && prio_[spine.back()] < prio_[v]) {
            last_popped = spine.back();
            spine.pop_back();
        }
        left_[v] = last_popped;
        if (last_popped >= 0) parent_[last_popped] = v;
        if (spine.empty()) {
            root_ = v;
            parent_[v] = -1;
        } else {
            right_[spine.back()] = v;
            parent_[v] = spine.back();
        }
        spine.push_back(v);
    }
    fix_sizes(root_);
}

void PathTreap::append(int v) {
    if (in_tree_[v]) throw std::invalid_argument("PathTreap: vertex already on path");
    in_tree_[v] = 1;
    left_[v] = right_[v] = parent_[v] = -1;
    size_[v] = 1;
    rev_[v] = 0;
    root_ = merge(root_, v);
}

void PathTreap::reverse_all() {
    if (root_ >= 0) rev_[root_] ^= 1;
}

void PathTreap::rotate_at(int pivot) {
    access(pivot);
    int k = rank_of(pivot);
    if (k >= size()) throw std::invalid_argument("PathTreap: pivot has no tail");
    auto [a, b] = split(root_, k);
    if (b >= 0) rev_[b] ^= 1;
    root_ = merge(a, b);
}

void PathTreap::cycle_break_after(int x) {
    access(x);
    int k = rank_of(x);
    auto [a, b] = split(root_, k);
    root_ = merge(b, a);
}

int PathTreap::walk_end(int t, bool leftmost) {
    for (;;) {
        push(t);
        int next = leftmost ? left_[t] : right_[t];
        if (next < 0) return t;
        t = next;
    }
}

int PathTreap::first() {
    if (root_ < 0) throw std::logic_error("PathTreap: empty");
    return walk_end(root_, true);
}

int PathTreap::last() {
    if (root_ < 0) throw std::logic_error("PathTreap: empty");
    return walk_end(root_, false);
}

int PathTreap::successor(int v) {
    access(v);
    if (right_[v] >= 0) return walk_end(right_[v], true);
    int x = v;
    while (parent_[x] >= 0 && right_[parent_[x]] == x) x = parent_[x];
    return parent_[x];
}

int PathTreap::predecessor(int v) {
    access(v);
    if (left_[v] >= 0) return walk_end(left_[v], false);
    int x = v;
    while (parent_[x] >= 0 && left_[parent_[x]] == x) x = parent_[x];
    return parent_[x];
}

std::vector<int> PathTreap::to_vector() {
    std::vector<int> out;
    out.reserve(size());
    std::vector<std::pair<int, bool>> stack;
    if (root_ >= 0) stack.emplace_back(root_, false);
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (t < 0) continue;
        if (expanded) {
            out.push_back(t);
            continue;
        }
        push(t);
        stack.emplace_back(right_[t], false);
        stack.emplace_back(t, true);
        stack.emplace_back(left_[t], false);
    }
    return out;
}

} // namespace pathcover
