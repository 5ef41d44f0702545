#include "pathcover/hamilton.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "pathcover/path_treap.hpp"

namespace pathcover {

bool is_m_path(const MPath& p, const Gamma& gamma, const Matching& m) {
    const auto& vs = p.vertices;
    if (vs.empty()) return false;
    std::vector<uint8_t> seen(gamma.vertex_count(), 0);
    std::vector<int> pos(gamma.vertex_count(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= gamma.vertex_count() || seen[v]) return false;
        seen[v] = 1;
        pos[v] = static_cast<int>(i);
    }
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if (!gamma.has_edge(vs[i], vs[i + 1])) return false;
    for (auto [a, b] : m) {
        bool a_on = seen[a], b_on = seen[b];
        if (!a_on && !b_on) continue;
        if (!(a_on && b_on)) return false;
        if (std::abs(pos[a] - pos[b]) != 1) return false;
    }
    return true;
}

std::vector<bool> m_edge_flags(const MPath& p, const Matching& m) {
    std::vector<int> pos;
    int max_label = -1;
    for (auto [a, b] : m) max_label = std::max({max_label, a, b});
    for (int v : p.vertices) max_label = std::max(max_label, v);
    pos.assign(max_label + 1, -1);
    for (size_t i = 0; i < p.vertices.size(); ++i) pos[p.vertices[i]] = static_cast<int>(i);
    std::vector<bool> flags;
    flags.reserve(m.size());
    for (auto [a, b] : m) {
        bool a_on = pos[a] >= 0, b_on = pos[b] >= 0;
        if (!a_on && !b_on) {
            flags.push_back(false);
        } else if (a_on && b_on && std::abs(pos[a] - pos[b]) == 1) {
            flags.push_back(true);
        } else {
            throw std::invalid_argument("m_edge_flags: path does not respect the matching");
        }
    }
    return flags;
}

MPath rotate(const MPath& p, int pivot_index, const Gamma& gamma, const Matching& m) {
    const auto& vs = p.vertices;
    const int l = static_cast<int>(vs.size()) - 1;
    if (pivot_index <= 0 || pivot_index >= l - 1)
        throw std::invalid_argument("rotate: pivot index outside (0, l-1)");
    int pivot = vs[pivot_index];
    for (auto [a, b] : m)
        if (pivot == a || pivot == b)
            throw std::invalid_argument("rotate: pivot is in V(M)");
    if (!gamma.has_edge(pivot, vs[l])) throw std::invalid_argument("rotate: chord missing");
    MPath out;
    out.vertices.assign(vs.begin(), vs.begin() + pivot_index + 1);
    for (int i = l; i > pivot_index; --i) out.vertices.push_back(vs[i]);
    return out;
}

MPath RotationState::reconstruct(int endpoint) const {
    std::vector<int> pivots;
    int e = endpoint;
    for (;;) {
        auto it = records.find(e);
        if (it == records.end())
            throw std::invalid_argument("RotationState: unknown endpoint");
        if (it->second.parent < 0) break;
        pivots.push_back(it->second.pivot);
        e = it->second.parent;
    }
    std::vector<int> vs = base.vertices;
    std::vector<int> pos(0);
    int n = 0;
    for (int v : vs) n = std::max(n, v + 1);
    pos.assign(n, -1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
        int i = pos[*it];
        std::reverse(vs.begin() + i + 1, vs.end());
    }
    MPath out;
    out.vertices = std::move(vs);
    return out;
}

namespace {

void validate_m_path_arg(const MPath& p, const Gamma& gamma, const Matching& m,
                         const char* where) {
    if (!is_m_path(p, gamma, m))
        throw std::invalid_argument(std::string(where) + ": input is not an M-path");
}

struct Records {
    std::vector<int> endpoint, parent, pivot, depth;

    void clear() {
        endpoint.clear();
        parent.clear();
        pivot.clear();
        depth.clear();
    }
    int add(int e, int par, int piv) {
        endpoint.push_back(e);
        parent.push_back(par);
        pivot.push_back(piv);
        depth.push_back(par < 0 ? 0 : depth[par] + 1);
        return static_cast<int>(endpoint.size()) - 1;
    }
    int size() const { return static_cast<int>(endpoint.size()); }
};

class Engine {
public:
    Engine(const Gamma& gamma, const Matching& m, const Graph* gstar)
        : gamma_(gamma),
          gstar_(gstar),
          n_(gamma.vertex_count()),
          partner_(n_, -1),
          path_(n_),
          stamp_(n_, 0),
          record_of_(n_, -1) {
        for (auto [a, b] : m) {
            if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
                throw std::invalid_argument("matching edge invalid");
            partner_[a] = b;
            partner_[b] = a;
        }
    }

    void build_path(const std::vector<int>& vs) { path_.build(vs); }

    // Appends w; a matched vertex pulls its partner in immediately so the
    // path stays an M-path. Returns false when that is impossible.
    bool append_extension(int w) {
        int p = partner_[w];
        if (p >= 0 && path_.on_path(p)) return false; // defensive; cannot occur on an M-path
        path_.append(w);
        if (p >= 0) path_.append(p);
        return true;
    }

    bool direct_extend() {
        int u = path_.last();
        for (int w : gamma_.neighbors(u)) {
            if (path_.on_path(w)) continue;
            if (append_extension(w)) return true;
        }
        return false;
    }

    // Rotation BFS from the free end (last), fixed end = first. Every
    // endpoint is enqueued once; transitions between records reuse the fact
    // that a rotation is its own inverse. With `grab` set, each processed
    // endpoint first tries a direct extension; on success the path has been
    // extended in place and true is returned (records are then stale).
    bool end_bfs(Records& recs, int& cur, bool grab) {
        recs.clear();
        ++epoch_;
        int root_end = path_.last();
        recs.add(root_end, -1, -1);
        stamp_[root_end] = epoch_;
        record_of_[root_end] = 0;
        cur = 0;
        if (path_.size() < 2) return grab && direct_extend();
        const int fixed = path_.first();
        for (int qi = 0; qi < recs.size(); ++qi) {
            transition(recs, cur, qi);
            int u = recs.endpoint[qi];
            if (grab && direct_extend()) return true;
            int pred_u = path_.predecessor(u);
            for (int w : gamma_.neighbors(u)) {
                if (!path_.on_path(w)) continue;
                if (partner_[w] >= 0) continue; // M-respecting: pivot outside V(M)
                if (w == fixed || w == pred_u) continue;
                int x = path_.successor(w);
                if (stamp_[x] != epoch_) {
                    stamp_[x] = epoch_;
                    record_of_[x] = recs.add(x, qi, w);
                }
            }
        }
        return false;
    }

    void transition(const Records& recs, int& cur, int target) {
        if (cur == target) return;
        int a = cur, b = target;
        lift_.clear();
        while (recs.depth[a] > recs.depth[b]) {
            path_.rotate_at(recs.pivot[a]);
            a = recs.parent[a];
        }
        while (recs.depth[b] > recs.depth[a]) {
            lift_.push_back(b);
            b = recs.parent[b];
        }
        while (a != b) {
            path_.rotate_at(recs.pivot[a]);
            a = recs.parent[a];
            lift_.push_back(b);
            b = recs.parent[b];
        }
        for (auto it = lift_.rbegin(); it != lift_.rend(); ++it)
            path_.rotate_at(recs.pivot[*it]);
        cur = target;
    }

    // Extends until neither endpoint family yields anything: direct
    // appends, then extension from any rotation-reachable endpoint, on both
    // orientations. On return recs1_ holds the completed rotation BFS of
    // the final orientation.
    void extend_to_maximal() {
        for (;;) {
            while (direct_extend()) {
            }
            if (end_bfs(recs1_, cur1_, true)) continue;
            path_.reverse_all();
            bool grew = false;
            while (direct_extend()) grew = true;
            if (!grew && !end_bfs(recs1_, cur1_, true)) return;
        }
    }

    // Re-opens the cycle formed by the current path plus the virtual edge
    // {last, first}: removes a non-matching cycle edge at x and extends
    // along the outgoing edge {x, y}.
    void reopen_and_extend(int x, int y) {
        int succ = (x == path_.last()) ? path_.first() : path_.successor(x);
        if (partner_[x] != succ) {
            path_.cycle_break_after(x); // ends at x
        } else if (x == path_.first()) {
            path_.reverse_all(); // pred side is the virtual edge; ends at x
        } else {
            path_.cycle_break_after(path_.predecessor(x));
            path_.reverse_all(); // ends at x
        }
        append_extension(y);
    }

    enum class Status { success, progressed, reanchored, stuck };

    // Iterates the endpoints of one rotation family in ascending label
    // order; for each, computes the opposite-end family and looks for a
    // gamma chord (a free cycle closing) or an E(G*) \ E(gamma) edge (a
    // booster) to one of its endpoints. With `hop` set it instead adopts
    // the first endpoint-pair configuration not seen before, which lets the
    // caller escape dead rotation families. Returns true when it produced
    // an outcome in `out`.
    bool endpoint_sweep(Records& stage1, int& cur1, bool spanning, int x_star, int y_star,
                        long long budget, bool hop, std::string& reason, Status& out) {
        std::vector<std::pair<int, int>> ends; // (endpoint, record index)
        ends.reserve(stage1.size());
        for (int i = 0; i < stage1.size(); ++i) ends.emplace_back(stage1.endpoint[i], i);
        std::sort(ends.begin(), ends.end());

        for (auto [u, idx] : ends) {
            transition(stage1, cur1, idx);
            path_.reverse_all(); // fix u; the old fixed end becomes free
            if (end_bfs(recs3_, cur3_, true)) {
                out = Status::progressed;
                return true;
            }
            if (!hop) {
                for (int w : gamma_.neighbors(u)) {
                    if (stamp_[w] != epoch_ || w == u) continue;
                    transition(recs3_, cur3_, record_of_[w]);
                    if (spanning) {
                        out = Status::success;
                    } else {
                        reopen_and_extend(x_star, y_star);
                        out = Status::progressed;
                    }
                    return true;
                }
                if (gstar_) {
                    for (int w : gstar_->neighbors(u)) {
                        if (stamp_[w] != epoch_ || gamma_.has_edge(u, w)) continue;
                        if (boosters_used_ >= budget) {
                            reason = "budget-exhausted";
                            out = Status::stuck;
                            return true;
                        }
                        gamma_.add_edge(u, w);
                        ++boosters_used_;
                        transition(recs3_, cur3_, record_of_[w]);
                        if (spanning) {
                            out = Status::success;
                        } else {
                            reopen_and_extend(x_star, y_star);
                            out = Status::progressed;
                        }
                        return true;
                    }
                }
            } else {
                std::vector<int> others;
                others.reserve(recs3_.size());
                for (int i = 0; i < recs3_.size(); ++i) others.push_back(recs3_.endpoint[i]);
                std::sort(others.begin(), others.end());
                for (int w : others) {
                    auto key = std::minmax(u, w);
                    if (!visited_anchors_.insert({key.first, key.second}).second) continue;
                    transition(recs3_, cur3_, record_of_[w]);
                    out = Status::reanchored;
                    return true;
                }
            }
            transition(recs3_, cur3_, 0);
            path_.reverse_all(); // restore the first-stage orientation
        }
        return false;
    }

    // Runs both endpoint families through endpoint_sweep, the smaller
    // family first: a path end sitting on a chord-poor chain may reach only
    // a couple of endpoints while the other end reaches a quarter of the
    // graph, and the small family's sweeps are the ones paired with the
    // rich opposite families.
    bool sweep_both_sides(bool spanning, int x_star, int y_star, long long budget, bool hop,
                          std::string& reason, Status& out) {
        // The first family (recs1_) describes the current orientation; the
        // second one is computed on the reversal. Transitions only make
        // sense inside the record space the path currently lives in, so
        // track which one that is.
        const int anchor1 = cur1_;
        path_.reverse_all();
        if (end_bfs(recs2_, cur2_, true)) {
            out = Status::progressed;
            return true;
        }
        bool in_second = true; // path is somewhere in recs2_'s space
        bool small_first = recs2_.size() <= recs1_.size();
        for (int round = 0; round < 2; ++round) {
            bool use_second = small_first == (round == 0);
            if (use_second) {
                if (!in_second) {
                    transition(recs1_, cur1_, anchor1);
                    path_.reverse_all();
                    cur2_ = 0;
                    in_second = true;
                }
                if (endpoint_sweep(recs2_, cur2_, spanning, x_star, y_star, budget, hop, reason,
                                   out))
                    return true;
            } else {
                if (in_second) {
                    transition(recs2_, cur2_, 0);
                    path_.reverse_all();
                    cur1_ = anchor1;
                    in_second = false;
                }
                if (endpoint_sweep(recs1_, cur1_, spanning, x_star, y_star, budget, hop, reason,
                                   out))
                    return true;
            }
        }
        if (in_second) {
            transition(recs2_, cur2_, 0);
            path_.reverse_all();
            cur1_ = anchor1;
        } else {
            transition(recs1_, cur1_, anchor1);
        }
        return false;
    }

    Status unified_progress(long long budget, std::string& reason) {
        if (path_.size() < 3) {
            reason = "no-booster";
            return Status::stuck;
        }
        const bool spanning = path_.size() == n_;
        int x_star = -1, y_star = -1;
        if (!spanning) {
            for (int v = 0; v < n_ && x_star < 0; ++v) {
                if (!path_.on_path(v)) continue;
                for (int w : gamma_.neighbors(v))
                    if (!path_.on_path(w)) {
                        x_star = v;
                        y_star = w;
                        break;
                    }
            }
            if (x_star < 0) {
                // The path's component is exhausted: extensions, re-openings
                // and boosters all stay inside V(P) from here on.
                reason = "gamma-disconnected";
                return Status::stuck;
            }
        }

        Status out = Status::stuck;
        if (sweep_both_sides(spanning, x_star, y_star, budget, false, reason, out)) return out;
        // Dead families on both ends: hop to an unexplored endpoint-pair
        // configuration of the same vertex set and let the caller retry the
        // whole cycle from there.
        {
            int a = path_.first(), b = path_.last();
            auto key = std::minmax(a, b);
            visited_anchors_.insert({key.first, key.second});
        }
        if (sweep_both_sides(spanning, x_star, y_star, budget, true, reason, out)) return out;
#ifdef PATHCOVER_ENGINE_TRACE
        std::fprintf(stderr, "[dead] n=%d path=%d fam1=%d fam2=%d anchors=%zu\n", n_, path_.size(),
                     recs1_.size(), recs2_.size(), visited_anchors_.size());
#endif
        reason = "no-booster";
        return Status::stuck;
    }

    // Deterministic seed sequence: matching edges in ascending order, then
    // edges with both endpoints unmatched. Returns false when k runs past
    // the sequence.
    bool seed_edge(int k, int& a, int& b) const {
        for (int v = 0; v < n_; ++v) {
            if (partner_[v] < 0 || partner_[v] < v) continue;
            if (k-- == 0) {
                a = v;
                b = partner_[v];
                return true;
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (partner_[v] >= 0) continue;
            for (int u : gamma_.neighbors(v)) {
                if (u < v || partner_[u] >= 0) continue;
                if (k-- == 0) {
                    a = v;
                    b = u;
                    return true;
                }
            }
        }
        return false;
    }

    HamiltonResult run(long long budget) {
        HamiltonResult result;
        if (n_ < 3) {
            result.failure_reason = "too-small";
            return result;
        }
        int longest = 0;
        const int max_reseeds = 12;
        std::string reason = "gamma-empty";
        for (int seed_idx = 0; seed_idx < max_reseeds; ++seed_idx) {
            int a = -1, b = -1;
            if (!seed_edge(seed_idx, a, b)) break;
            // A rigid pair of path ends can exhaust its whole rotation
            // family tree; a fresh trajectory is then worth more than any
            // further local search. Boosters added so far stay in gamma.
            build_path({a, b});
            visited_anchors_.clear();
            long long idle = 0;
            const long long max_idle = 4096; // safety valve; anchor dedupe terminates first
            bool dead = false;
            while (!dead) {
                extend_to_maximal();
                longest = std::max(longest, path_.size());
                int size_before = path_.size();
                Status status = unified_progress(budget, reason);
                longest = std::max(longest, path_.size());
                if (status == Status::success) {
                    result.success = true;
                    result.cycle = path_.to_vector();
                    result.boosters_used = boosters_used_;
                    result.longest_path = longest;
                    return result;
                }
                if (status == Status::stuck) {
                    if (reason == "budget-exhausted") {
                        result.failure_reason = reason;
                        result.boosters_used = boosters_used_;
                        result.longest_path = longest;
                        return result;
                    }
                    dead = true; // no-booster / gamma-disconnected: reseed
                } else if (path_.size() > size_before) {
                    idle = 0;
                    visited_anchors_.clear(); // new vertex set, fresh anchors
                } else if (status == Status::progressed) {
                    result.failure_reason = "stalled";
                    result.boosters_used = boosters_used_;
                    result.longest_path = longest;
                    return result;
                } else if (++idle > max_idle) {
                    dead = true;
                }
            }
        }
        result.failure_reason = reason;
        result.boosters_used = boosters_used_;
        result.longest_path = longest;
        return result;
    }

    Gamma gamma_;
    const Graph* gstar_;
    int n_;
    std::vector<int> partner_;
    PathTreap path_;
    Records recs1_, recs2_, recs3_;
    int cur1_ = -1, cur2_ = -1, cur3_ = -1;
    std::set<std::pair<int, int>> visited_anchors_;
    std::vector<uint64_t> stamp_;
    uint64_t epoch_ = 0;
    std::vector<int> record_of_;
    std::vector<int> lift_;
    long long boosters_used_ = 0;
};

} // namespace

RotationState compute_end_set(const MPath& p, const Gamma& gamma, const Matching& m) {
    validate_m_path_arg(p, gamma, m, "compute_end_set");
    RotationState state;
    state.fixed_end = p.vertices.front();
    state.base = p;
    if (p.vertices.size() < 2) return state; // no endpoint other than the fixed one
    Engine eng(gamma, m, nullptr);
    eng.build_path(p.vertices);
    eng.end_bfs(eng.recs1_, eng.cur1_, false);
    for (int i = 0; i < eng.recs1_.size(); ++i) {
        int e = eng.recs1_.endpoint[i];
        int par = eng.recs1_.parent[i];
        state.end_set.push_back(e);
        state.records[e] = {par < 0 ? -1 : eng.recs1_.endpoint[par], eng.recs1_.pivot[i]};
    }
    std::sort(state.end_set.begin(), state.end_set.end());
    return state;
}

MPath extend_maximal(const MPath& p, const Gamma& gamma, const Matching& m) {
    validate_m_path_arg(p, gamma, m, "extend_maximal");
    Engine eng(gamma, m, nullptr);
    eng.build_path(p.vertices);
    eng.extend_to_maximal();
    MPath out;
    out.vertices = eng.path_.to_vector();
    return out;
}

std::optional<std::pair<int, int>> find_booster(const MPath& p, const Gamma& gamma,
                                                const Graph& gstar, const Matching& m) {
    validate_m_path_arg(p, gamma, m, "find_booster");
    if (p.vertices.size() < 2) return std::nullopt;
    Engine eng(gamma, m, &gstar);
    eng.build_path(p.vertices);
    eng.end_bfs(eng.recs1_, eng.cur1_, false);
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < eng.recs1_.size(); ++i) ends.emplace_back(eng.recs1_.endpoint[i], i);
    std::sort(ends.begin(), ends.end());
    for (auto [u, idx] : ends) {
        eng.transition(eng.recs1_, eng.cur1_, idx);
        eng.path_.reverse_all();
        eng.end_bfs(eng.recs2_, eng.cur2_, false);
        for (int w : gstar.neighbors(u))
            if (eng.stamp_[w] == eng.epoch_ && !gamma.has_edge(u, w))
                return std::make_pair(u, w);
        eng.transition(eng.recs2_, eng.cur2_, 0);
        eng.path_.reverse_all();
    }
    return std::nullopt;
}

HamiltonResult hamilton_m_cycle(const Graph& gstar, const Matching& m, const Gamma& gamma0,
                                long long budget) {
    if (budget < 1) throw std::invalid_argument("hamilton_m_cycle: budget must be >= 1");
    if (gamma0.vertex_count() != gstar.vertex_count())
        throw std::invalid_argument("hamilton_m_cycle: vertex count mismatch");
    for (auto [a, b] : m)
        if (!gamma0.has_edge(a, b))
            throw std::invalid_argument("hamilton_m_cycle: gamma0 must contain the matching");
    Engine eng(gamma0, m, &gstar);
    return eng.run(budget);
}

CycleVerdict verify_m_cycle(const std::vector<int>& cycle, const Graph& gstar,
                            const Matching& m) {
    CycleVerdict verdict;
    const int n = gstar.vertex_count();
    const int k = static_cast<int>(cycle.size());
    if (k != n) verdict.violations.push_back("not spanning: cycle has " + std::to_string(k) +
                                             " of " + std::to_string(n) + " vertices");
    std::vector<int> pos(n, -1);
    bool labels_ok = true;
    for (int i = 0; i < k; ++i) {
        int v = cycle[i];
        if (v < 0 || v >= n) {
            verdict.violations.push_back("label out of range: " + std::to_string(v));
            labels_ok = false;
            break;
        }
        if (pos[v] >= 0) {
            verdict.violations.push_back("repeated vertex: " + std::to_string(v));
            labels_ok = false;
            break;
        }
        pos[v] = i;
    }
    if (labels_ok && k >= 3) {
        for (int i = 0; i < k; ++i) {
            int u = cycle[i], v = cycle[(i + 1) % k];
            if (!gstar.has_edge(u, v)) {
                verdict.violations.push_back("non-edge on cycle: {" + std::to_string(u) + "," +
                                             std::to_string(v) + "}");
                break;
            }
        }
        for (auto [a, b] : m) {
            if (pos[a] < 0 || pos[b] < 0) {
                verdict.violations.push_back("matching vertex missing from cycle");
                break;
            }
            int d = std::abs(pos[a] - pos[b]);
            if (d != 1 && d != k - 1) {
                verdict.violations.push_back("matching edge {" + std::to_string(a) + "," +
                                             std::to_string(b) + "} not consecutive");
                break;
            }
        }
    } else if (k < 3) {
        verdict.violations.push_back("cycle shorter than 3 vertices");
    }
    verdict.pass = verdict.violations.empty();
    return verdict;
}

} // namespace pathcover
