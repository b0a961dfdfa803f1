#pragma once
// subgraph.hpp — forbidden-structure detectors: flower containment, disjoint
// path packings, longest path, circumference, bounded vertex cover, and
// minimum-degree peeling.
//
// Containment searches are exact backtracking with a node-expansion budget;
// running out of budget is reported as a distinct outcome, never as absence.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qflower/errors.hpp"
#include "qflower/graph.hpp"

#include <json.hpp>

namespace qflower {

enum class Presence { absent, found, budget_exceeded };

struct DetectorOptions {
    std::uint64_t budget = 100'000'000ULL;  // node expansions per call
};

/// Witness for flower containment: the shared vertex plus one vertex sequence
/// per cycle, cycle i of length 2a_i+1 (listed with the center first, lengths
/// non-increasing to match the spec order). Any two cycles meet exactly in
/// the center.
struct FlowerWitness {
    int center = -1;
    std::vector<std::vector<int>> cycles;

    bool valid_in(const Graph& g, const FlowerSpec& spec) const {
        if (center < 0 || center >= g.order()) return false;
        if (static_cast<int>(cycles.size()) != spec.k()) return false;
        std::vector<bool> seen_outside(static_cast<std::size_t>(g.order()), false);
        for (int i = 0; i < spec.k(); ++i) {
            const auto& c = cycles[static_cast<std::size_t>(i)];
            if (static_cast<int>(c.size()) != 2 * spec.half_lengths()[static_cast<std::size_t>(i)] + 1) return false;
            if (c.front() != center) return false;
            for (std::size_t j = 0; j < c.size(); ++j) {
                int u = c[j], v = c[(j + 1) % c.size()];
                if (!g.has_edge(u, v)) return false;
            }
            for (std::size_t j = 1; j < c.size(); ++j) {
                int u = c[j];
                if (u == center || seen_outside[static_cast<std::size_t>(u)]) return false;
                seen_outside[static_cast<std::size_t>(u)] = true;
            }
        }
        return true;
    }

    nlohmann::json to_json() const { return {{"center", center}, {"cycles", cycles}}; }
};

struct FlowerSearchResult {
    Presence status = Presence::absent;
    std::optional<FlowerWitness> witness;
    std::uint64_t expansions = 0;
};

struct PathPackResult {
    Presence status = Presence::absent;
    std::uint64_t expansions = 0;
};

namespace detail {

// Neighbor visit order for the detectors: low degree first, then low id.
// Failing branches die fastest on sparse neighborhoods.
inline std::vector<std::vector<int>> neighbor_search_order(const Graph& g) {
    std::vector<std::vector<int>> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& lst = order[static_cast<std::size_t>(v)];
        lst = g.neighbor_list(v);
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
        });
    }
    return order;
}

// Backtracking packer for vertex-disjoint paths with prescribed orders
// (ascending). Optionally restricts both endpoints of every path to an
// endpoint mask (the center's neighborhood in flower searches).
//
// Symmetry control: every free path is enumerated with start < end (path
// reversal), and among equal-order paths the start vertices must increase.
// On top of that, failed search states are memoized by (path index,
// used-vertex set): distinct placement orders of the same vertex sets reach
// identical states, and dense absence proofs revisit such states heavily.
// A state that failed under some start floor fails under any higher floor,
// so the memo stores the smallest floor that failed.
class PathPacker {
public:
    PathPacker(const Graph& g, const std::vector<std::vector<int>>& nbr_order, std::vector<int> orders,
               std::uint64_t budget)
        : g_(g),
          nbr_order_(nbr_order),
          orders_(std::move(orders)),
          budget_(budget),
          used_(static_cast<std::size_t>(g.words_per_row()), 0) {}

    void block_vertex(int v) { used_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63); }
    void restrict_endpoints(std::span<const std::uint64_t> mask) {
        endpoint_mask_.assign(mask.begin(), mask.end());
    }

    bool exceeded() const { return exceeded_; }
    std::uint64_t expansions() const { return expansions_; }
    const std::vector<std::vector<int>>& placed() const { return placed_; }

    bool run() { return place(0, 0); }

    // First path starts at `start` (already known to satisfy the endpoint
    // restriction); remaining paths are packed normally, exempt from the
    // equal-order floor against the anchored path.
    bool run_forced_start(int first_order, int start) {
        if (is_used(start) || !is_endpoint(start)) return false;
        set_used(start);
        std::vector<int> cur{start};
        bool ok = false;
        if (first_order == 1) {
            placed_.push_back(cur);
            ok = place(1, 0);
            if (!ok) placed_.pop_back();
        } else {
            ok = extend(0, cur, first_order - 1, /*dedup_floor=*/-1, /*anchored=*/true);
        }
        if (!ok) clear_used(start);
        return ok;
    }

    // First path contains the edge (a,b) as a consecutive pair; the path is
    // grown outward from both ends of that edge.
    bool run_forced_edge(int first_order, int a, int b) {
        if (first_order < 2 || is_used(a) || is_used(b)) return false;
        set_used(a);
        set_used(b);
        for (int left = 0; left + 2 <= first_order && !exceeded_; ++left) {
            std::vector<int> head{b, a};  // grow from a; reversed into place later
            if (grow_left(head, left, first_order)) return true;
        }
        clear_used(a);
        clear_used(b);
        return false;
    }

private:
    static constexpr std::size_t memo_cap = 1u << 22;

    struct StateHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const {
            std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
            for (std::uint64_t w : v) {
                h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    bool tick() {
        if (++expansions_ > budget_) {
            exceeded_ = true;
            return false;
        }
        return true;
    }

    bool is_used(int v) const { return (used_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u; }
    void set_used(int v) { used_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63); }
    void clear_used(int v) { used_[static_cast<std::size_t>(v >> 6)] &= ~(1ull << (v & 63)); }
    bool is_endpoint(int v) const {
        return endpoint_mask_.empty() || ((endpoint_mask_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u);
    }

    bool place(std::size_t idx, int floor) {
        if (idx == orders_.size()) return true;
        auto& level = memo_[idx];
        auto hit = level.find(used_);
        if (hit != level.end() && floor >= hit->second) return false;
        int m = orders_[idx];
        for (int s = floor; s < g_.order(); ++s) {
            if (is_used(s) || !is_endpoint(s)) continue;
            if (!tick()) return false;
            set_used(s);
            std::vector<int> cur{s};
            bool ok;
            if (m == 1) {
                placed_.push_back(cur);
                ok = place(idx + 1, next_floor(idx, s));
                if (!ok) placed_.pop_back();
            } else {
                ok = extend(idx, cur, m - 1, s, false);
            }
            if (ok) return true;
            clear_used(s);
            if (exceeded_) return false;
        }
        if (level.size() < memo_cap) {
            auto [it, fresh] = level.try_emplace(used_, floor);
            if (!fresh) it->second = std::min(it->second, floor);
        }
        return false;
    }

    int next_floor(std::size_t idx, int start) const {
        return (idx + 1 < orders_.size() && orders_[idx + 1] == orders_[idx]) ? start + 1 : 0;
    }

    // Extend the path at `idx` by `need` more vertices; the final vertex must
    // satisfy the endpoint restriction and, when dedup_floor >= 0, exceed it
    // (path reversal dedup). Anchored first paths impose no floor downstream.
    bool extend(std::size_t idx, std::vector<int>& cur, int need, int dedup_floor, bool anchored) {
        int last = cur.back();
        for (int w : nbr_order_[static_cast<std::size_t>(last)]) {
            if (is_used(w)) continue;
            if (need == 1 && (!is_endpoint(w) || w <= dedup_floor)) continue;
            if (!tick()) return false;
            set_used(w);
            cur.push_back(w);
            bool ok;
            if (need == 1) {
                placed_.push_back(cur);
                ok = place(idx + 1, anchored ? 0 : next_floor(idx, cur.front()));
                if (!ok) placed_.pop_back();
            } else {
                ok = extend(idx, cur, need - 1, dedup_floor, anchored);
            }
            if (ok) return true;
            cur.pop_back();
            clear_used(w);
            if (exceeded_) return false;
        }
        return false;
    }

    // Forced-edge helpers: head holds [b, a, left...] while growing beyond a;
    // it is reversed before growing beyond b.
    bool grow_left(std::vector<int>& head, int left, int order) {
        if (left == 0) {
            if (!is_endpoint(head.back())) return false;
            std::vector<int> pathrev(head.rbegin(), head.rend());  // [l...,a,b]
            int right = order - static_cast<int>(pathrev.size());
            return grow_right(pathrev, right);
        }
        int last = head.back();
        for (int w : nbr_order_[static_cast<std::size_t>(last)]) {
            if (is_used(w)) continue;
            if (!tick()) return false;
            set_used(w);
            head.push_back(w);
            if (grow_left(head, left - 1, order)) return true;
            head.pop_back();
            clear_used(w);
            if (exceeded_) return false;
        }
        return false;
    }

    bool grow_right(std::vector<int>& cur, int right) {
        if (right == 0) {
            if (!is_endpoint(cur.back())) return false;
            placed_.push_back(cur);
            bool ok = place(1, 0);
            if (!ok) placed_.pop_back();
            return ok;
        }
        int last = cur.back();
        for (int w : nbr_order_[static_cast<std::size_t>(last)]) {
            if (is_used(w)) continue;
            if (right == 1 && !is_endpoint(w)) continue;
            if (!tick()) return false;
            set_used(w);
            cur.push_back(w);
            if (grow_right(cur, right - 1)) return true;
            cur.pop_back();
            clear_used(w);
            if (exceeded_) return false;
        }
        return false;
    }

    const Graph& g_;
    const std::vector<std::vector<int>>& nbr_order_;
    std::vector<int> orders_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    bool exceeded_ = false;
    std::vector<std::uint64_t> used_;
    std::vector<std::uint64_t> endpoint_mask_;
    std::vector<std::vector<int>> placed_;
    std::unordered_map<std::size_t, std::unordered_map<std::vector<std::uint64_t>, int, StateHash>> memo_;
};

// Candidate centers: high degree first. A center of F_{a_1..a_k} needs
// degree at least 2k.
inline std::vector<int> center_candidates(const Graph& g, int k) {
    std::vector<int> centers;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2 * k) centers.push_back(v);
    std::sort(centers.begin(), centers.end(), [&](int a, int b) {
        return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
    });
    return centers;
}

inline std::vector<int> flower_path_orders(const FlowerSpec& spec) {
    std::vector<int> orders;
    orders.reserve(static_cast<std::size_t>(spec.k()));
    for (int a : spec.half_lengths()) orders.push_back(2 * a);
    std::sort(orders.begin(), orders.end());  // shortest paths fail fastest
    return orders;
}

// Map the packer's placed paths (any order) back to the spec's
// non-increasing cycle listing.
inline FlowerWitness assemble_witness(int center, std::vector<std::vector<int>> placed) {
    std::sort(placed.begin(), placed.end(),
              [](const auto& x, const auto& y) { return x.size() > y.size(); });
    FlowerWitness w;
    w.center = center;
    for (auto& p : placed) {
        std::vector<int> cyc{center};
        cyc.insert(cyc.end(), p.begin(), p.end());
        w.cycles.push_back(std::move(cyc));
    }
    return w;
}

}  // namespace detail

/// Does g contain F_{a_1,...,a_k} as a (not necessarily induced) subgraph?
/// For each candidate center u the search packs vertex-disjoint paths of
/// orders 2a_1,...,2a_k into g - u with both endpoints of every path inside
/// N(u); each such path closes into an odd cycle through u.
inline FlowerSearchResult contains_flower(const Graph& g, const FlowerSpec& spec, DetectorOptions opts = {}) {
    FlowerSearchResult res;
    if (g.order() < spec.order()) return res;
    auto nbr_order = detail::neighbor_search_order(g);
    auto orders = detail::flower_path_orders(spec);
    for (int u : detail::center_candidates(g, spec.k())) {
        detail::PathPacker packer(g, nbr_order, orders, opts.budget - res.expansions);
        packer.block_vertex(u);
        packer.restrict_endpoints(g.neighbor_bits(u));
        bool found = packer.run();
        res.expansions += packer.expansions();
        if (found) {
            res.status = Presence::found;
            res.witness = detail::assemble_witness(u, packer.placed());
            return res;
        }
        if (packer.exceeded()) {
            res.status = Presence::budget_exceeded;
            return res;
        }
    }
    return res;
}

/// Flower containment restricted to witnesses that use the edge (a,b).
/// Exact for that restricted question; in particular, when g minus the edge
/// is flower-free this decides containment in g itself. Used as the fast
/// path of incremental edge-addition searches.
inline FlowerSearchResult contains_flower_using_edge(const Graph& g, const FlowerSpec& spec, int a, int b,
                                                     DetectorOptions opts = {}) {
    if (!g.has_edge(a, b)) throw DomainError("contains_flower_using_edge: edge not present");
    FlowerSearchResult res;
    if (g.order() < spec.order()) return res;
    auto nbr_order = detail::neighbor_search_order(g);
    auto orders = detail::flower_path_orders(spec);
    std::vector<int> distinct = orders;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    for (int u : detail::center_candidates(g, spec.k())) {
        for (int m : distinct) {
            std::vector<int> rest;
            bool dropped = false;
            for (int o : orders) {
                if (!dropped && o == m) {
                    dropped = true;
                    continue;
                }
                rest.push_back(o);
            }
            std::vector<int> packer_orders;
            packer_orders.reserve(orders.size());
            packer_orders.push_back(m);
            packer_orders.insert(packer_orders.end(), rest.begin(), rest.end());

            detail::PathPacker packer(g, nbr_order, packer_orders, opts.budget - res.expansions);
            packer.block_vertex(u);
            packer.restrict_endpoints(g.neighbor_bits(u));
            bool found = false;
            if (u == a || u == b) {
                // The anchor edge is a spoke: the other endpoint starts a path.
                found = packer.run_forced_start(m, u == a ? b : a);
            } else {
                found = packer.run_forced_edge(m, a, b);
            }
            res.expansions += packer.expansions();
            if (found) {
                res.status = Presence::found;
                res.witness = detail::assemble_witness(u, packer.placed());
                return res;
            }
            if (packer.exceeded()) {
                res.status = Presence::budget_exceeded;
                return res;
            }
        }
    }
    return res;
}

/// Does g contain vertex-disjoint paths with exactly the given orders?
inline PathPackResult contains_disjoint_paths(const Graph& g, std::span<const int> orders, DetectorOptions opts = {}) {
    if (orders.empty()) throw DomainError("contains_disjoint_paths needs at least one order");
    std::int64_t total = 0;
    for (int m : orders) {
        if (m < 1) throw DomainError("path orders must be >= 1");
        total += m;
    }
    PathPackResult res;
    if (total > g.order()) return res;
    std::vector<int> sorted(orders.begin(), orders.end());
    std::sort(sorted.begin(), sorted.end());
    auto nbr_order = detail::neighbor_search_order(g);
    detail::PathPacker packer(g, nbr_order, sorted, opts.budget);
    bool found = packer.run();
    res.expansions = packer.expansions();
    res.status = found ? Presence::found : (packer.exceeded() ? Presence::budget_exceeded : Presence::absent);
    return res;
}

// ---------------------------------------------------------------------------
// Longest path and circumference: exact bitmask dynamic programs up to
// n = 24, budgeted branch and bound beyond.

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks32(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
    g.for_each_edge([&](int u, int v) {
        adj[static_cast<std::size_t>(u)] |= 1u << v;
        adj[static_cast<std::size_t>(v)] |= 1u << u;
    });
    return adj;
}

}  // namespace detail

inline constexpr int exact_dp_max_order = 24;

/// Number of vertices of a longest path. Exact; n <= 24.
inline int longest_path_order(const Graph& g) {
    if (g.order() < 1) throw DomainError("longest_path_order needs n >= 1");
    if (g.order() > exact_dp_max_order)
        throw CapabilityError("exact longest path is supported for n <= 24; use the budgeted overload");
    int n = g.order();
    auto adj = detail::adjacency_masks32(g);
    std::vector<std::uint32_t> ends(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[std::size_t(1) << v] = 1u << v;
    int best = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        best = std::max(best, std::popcount(mask));
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return best;
}

/// Length of a longest cycle; 0 if acyclic. Exact; n <= 24.
inline int circumference(const Graph& g) {
    if (g.order() < 1) throw DomainError("circumference needs n >= 1");
    if (g.order() > exact_dp_max_order)
        throw CapabilityError("exact circumference is supported for n <= 24; use the budgeted overload");
    int n = g.order();
    auto adj = detail::adjacency_masks32(g);
    // ends[mask]: ends of simple paths covering mask that start at the lowest
    // set bit; a cycle is closed against that lowest vertex.
    std::vector<std::uint32_t> ends(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[std::size_t(1) << v] = 1u << v;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        int s = std::countr_zero(mask);
        if (std::popcount(mask) >= 3 && (e & adj[static_cast<std::size_t>(s)]) != 0)
            best = std::max(best, std::popcount(mask));
        std::uint32_t above = ~((std::uint32_t(2) << s) - 1);  // vertices > s
        while (e) {
            int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask & above;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return best;
}

namespace detail {

struct DfsBudget {
    std::uint64_t left;
    void tick() {
        if (left-- == 0) throw BudgetExceededError("path search budget exhausted");
    }
};

inline void longest_path_dfs(const Graph& g, int v, std::vector<bool>& used, int len, int& best, DfsBudget& budget) {
    budget.tick();
    best = std::max(best, len);
    g.for_each_neighbor(v, [&](int w) {
        if (used[static_cast<std::size_t>(w)]) return;
        used[static_cast<std::size_t>(w)] = true;
        longest_path_dfs(g, w, used, len + 1, best, budget);
        used[static_cast<std::size_t>(w)] = false;
    });
}

inline void cycle_dfs(const Graph& g, int start, int v, std::vector<bool>& used, int len, int& best,
                      DfsBudget& budget) {
    budget.tick();
    if (len >= 3 && g.has_edge(v, start)) best = std::max(best, len);
    g.for_each_neighbor(v, [&](int w) {
        if (w <= start || used[static_cast<std::size_t>(w)]) return;
        used[static_cast<std::size_t>(w)] = true;
        cycle_dfs(g, start, w, used, len + 1, best, budget);
        used[static_cast<std::size_t>(w)] = false;
    });
}

}  // namespace detail

/// Branch-and-bound longest path for any order, spending at most `budget`
/// search nodes. Throws BudgetExceededError when the answer is not settled.
inline int longest_path_order(const Graph& g, std::uint64_t budget) {
    if (g.order() < 1) throw DomainError("longest_path_order needs n >= 1");
    if (g.order() <= exact_dp_max_order) return longest_path_order(g);
    detail::DfsBudget b{budget};
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    int best = 1;
    for (int s = 0; s < g.order(); ++s) {
        used[static_cast<std::size_t>(s)] = true;
        detail::longest_path_dfs(g, s, used, 1, best, b);
        used[static_cast<std::size_t>(s)] = false;
    }
    return best;
}

inline int circumference(const Graph& g, std::uint64_t budget) {
    if (g.order() < 1) throw DomainError("circumference needs n >= 1");
    if (g.order() <= exact_dp_max_order) return circumference(g);
    detail::DfsBudget b{budget};
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        used[static_cast<std::size_t>(s)] = true;
        detail::cycle_dfs(g, s, s, used, 1, best, b);
        used[static_cast<std::size_t>(s)] = false;
    }
    return best;
}

/// Is g free of paths on k vertices?
inline bool is_path_free(const Graph& g, int k) { return longest_path_order(g) <= k - 1; }

// ---------------------------------------------------------------------------
// Split containment = bounded vertex cover.

namespace detail {

struct VcState {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> deg;
    int words;

    void drop_vertex(int v, std::vector<int>& undo_nbrs) {
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] &= ~(1ull << (v & 63));
                --deg[static_cast<std::size_t>(u)];
                undo_nbrs.push_back(u);
            }
        }
        rows[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(words), 0);
        deg[static_cast<std::size_t>(v)] = 0;
    }

    void restore_vertex(int v, const std::vector<int>& nbrs) {
        for (int u : nbrs) {
            rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u >> 6)] |= 1ull << (u & 63);
            rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
            ++deg[static_cast<std::size_t>(u)];
        }
        deg[static_cast<std::size_t>(v)] = static_cast<int>(nbrs.size());
    }
};

inline bool vc_branch(VcState& st, int left, std::vector<int>& cover) {
    int v = -1, dmax = 0;
    for (std::size_t i = 0; i < st.deg.size(); ++i)
        if (st.deg[i] > dmax) {
            dmax = st.deg[i];
            v = static_cast<int>(i);
        }
    if (v == -1) return true;  // no edges left
    if (left == 0) return false;
    if (dmax == 1) {
        // remaining edges form a matching: one endpoint each suffices
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < st.deg.size(); ++i) {
            if (st.deg[i] != 1) continue;
            for (int w = 0; w < st.words; ++w) {
                std::uint64_t bits = st.rows[i][static_cast<std::size_t>(w)];
                if (bits) {
                    int u = (w << 6) + std::countr_zero(bits);
                    if (static_cast<int>(i) < u) edges.emplace_back(static_cast<int>(i), u);
                    break;
                }
            }
        }
        if (static_cast<int>(edges.size()) > left) return false;
        for (auto [x, y] : edges) cover.push_back(x);
        return true;
    }
    // Branch 1: v itself is in the cover.
    std::vector<int> undo;
    st.drop_vertex(v, undo);
    cover.push_back(v);
    if (vc_branch(st, left - 1, cover)) return true;
    cover.pop_back();
    st.restore_vertex(v, undo);
    // Branch 2: v stays out, so all of N(v) is in the cover.
    if (dmax > left) return false;
    std::vector<int> nbrs;
    for (int w = 0; w < st.words; ++w) {
        std::uint64_t bits = st.rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
        while (bits) {
            nbrs.push_back((w << 6) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    std::vector<std::vector<int>> undos;
    for (int u : nbrs) {
        undos.emplace_back();
        st.drop_vertex(u, undos.back());
        cover.push_back(u);
    }
    if (vc_branch(st, left - static_cast<int>(nbrs.size()), cover)) return true;
    for (int i = static_cast<int>(nbrs.size()) - 1; i >= 0; --i) {
        cover.pop_back();
        st.restore_vertex(nbrs[static_cast<std::size_t>(i)], undos[static_cast<std::size_t>(i)]);
    }
    return false;
}

}  // namespace detail

/// A vertex set T with |T| <= t whose removal leaves an independent set
/// (equivalently: g is a subgraph of S_{n,t'} for some t' <= t), or nullopt.
/// Bounded search tree branching on a maximum-degree vertex.
inline std::optional<std::vector<int>> split_containment(const Graph& g, int t) {
    if (t < 0) throw DomainError("split_containment needs t >= 0");
    detail::VcState st;
    st.words = g.words_per_row();
    st.deg.resize(static_cast<std::size_t>(g.order()));
    st.rows.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto row = g.neighbor_bits(v);
        st.rows[static_cast<std::size_t>(v)].assign(row.begin(), row.end());
        st.deg[static_cast<std::size_t>(v)] = g.degree(v);
    }
    std::vector<int> cover;
    if (!detail::vc_branch(st, t, cover)) return std::nullopt;
    std::sort(cover.begin(), cover.end());
    return cover;
}

// ---------------------------------------------------------------------------
// Peeling.

/// Result of repeated minimum-degree deletion: the surviving vertex set (in
/// ascending order), the removal order, and each vertex's degree at the
/// moment it was removed.
struct PeelResult {
    std::vector<int> kept;
    std::vector<int> removed;
    std::vector<int> removed_degrees;
};

/// Repeatedly delete a current-minimum-degree vertex (lowest id on ties)
/// while the minimum degree is below `threshold`. The terminal induced
/// subgraph, possibly empty, has minimum degree >= threshold, and every
/// removed vertex had degree <= threshold-1 at removal time.
inline PeelResult peel_min_degree(const Graph& g, int threshold) {
    if (threshold < 0) throw DomainError("peel_min_degree needs threshold >= 0");
    PeelResult res;
    std::vector<bool> alive(static_cast<std::size_t>(g.order()), true);
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int alive_count = g.order();
    while (alive_count > 0) {
        int v = -1;
        for (int u = 0; u < g.order(); ++u)
            if (alive[static_cast<std::size_t>(u)] && (v == -1 || deg[static_cast<std::size_t>(u)] < deg[static_cast<std::size_t>(v)]))
                v = u;
        if (deg[static_cast<std::size_t>(v)] >= threshold) break;
        alive[static_cast<std::size_t>(v)] = false;
        --alive_count;
        res.removed.push_back(v);
        res.removed_degrees.push_back(deg[static_cast<std::size_t>(v)]);
        g.for_each_neighbor(v, [&](int u) {
            if (alive[static_cast<std::size_t>(u)]) --deg[static_cast<std::size_t>(u)];
        });
    }
    for (int v = 0; v < g.order(); ++v)
        if (alive[static_cast<std::size_t>(v)]) res.kept.push_back(v);
    return res;
}

// ---------------------------------------------------------------------------
// Block structure, used to classify edge-extremal graphs of bounded
// circumference.

/// Biconnected components as vertex sets (each sorted). A bridge forms a
/// 2-vertex block; isolated vertices belong to no block.
inline std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    int n = g.order();
    std::vector<int> num(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    auto emit_block = [&](int u, int v) {
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == std::make_pair(u, v)) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    // Recursive lowlink DFS; depth is bounded by the order cap.
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        g.for_each_neighbor(v, [&](int w) {
            if (w == parent) return;
            if (num[static_cast<std::size_t>(w)] == -1) {
                edge_stack.emplace_back(v, w);
                self(self, w, v);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= num[static_cast<std::size_t>(v)]) emit_block(v, w);
            } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(v)]) {
                edge_stack.emplace_back(v, w);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], num[static_cast<std::size_t>(w)]);
            }
        });
    };
    for (int v = 0; v < n; ++v)
        if (num[static_cast<std::size_t>(v)] == -1) dfs(dfs, v, -1);
    return blocks;
}

/// Connected graph all of whose blocks are complete graphs of order k
/// (trivially true for K_1). The edge-extremal graphs of circumference <= k
/// are exactly these; windmills are the members whose blocks share one
/// common vertex.
inline bool is_clique_cactus(const Graph& g, int k) {
    if (g.order() == 0 || !g.is_connected()) return false;
    if (g.order() == 1) return true;
    auto blocks = biconnected_blocks(g);
    for (const auto& blk : blocks) {
        if (static_cast<int>(blk.size()) != k) return false;
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                if (!g.has_edge(blk[i], blk[j])) return false;
    }
    return true;
}

/// Is g the windmill L_{r,k-1} for some r >= 1 (r cliques K_k sharing one
/// vertex)? K_1 counts as the degenerate r = 0 case.
inline bool is_windmill_of_clique_order(const Graph& g, int k) {
    if (!is_clique_cactus(g, k)) return false;
    auto blocks = biconnected_blocks(g);
    if (blocks.size() <= 1) return true;
    std::vector<int> common = blocks[0];
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), blocks[i].begin(), blocks[i].end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    return common.size() == 1;
}

}  // namespace qflower
