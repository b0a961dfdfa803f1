#pragma once
// oracle.hpp — test-only reference implementations, deliberately independent
// of the library's algorithms: a dense Jacobi eigensolver for q, naive
// exhaustive containment checks that try every vertex arrangement, DFS
// longest path / cycle enumeration, and subset-enumeration vertex cover.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qflower/graph.hpp"

namespace oracle {

using qflower::FlowerSpec;
using qflower::Graph;

// Largest eigenvalue of Q = D + A by cyclic Jacobi rotations on the dense
// matrix. Shares nothing with the library's power iteration.
inline double q_max_eigenvalue(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0.0;
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int v = 0; v < n; ++v) {
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = g.degree(v);
        g.for_each_neighbor(v, [&](int u) { m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1.0; });
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] * m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (std::abs(apq) < 1e-15) continue;
                double app = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
                double aqq = m[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
                double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
                double c = std::cos(theta), s = std::sin(theta);
                for (int i = 0; i < n; ++i) {
                    double aip = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
                    double aiq = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] = c * aip - s * aiq;
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
                    double aqi = m[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)];
                    m[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] = c * api - s * aqi;
                    m[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] = s * api + c * aqi;
                }
            }
        }
    }
    double best = m[0][0];
    for (int i = 1; i < n; ++i) best = std::max(best, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    return best;
}

namespace detail {

// Enumerate every injective vertex sequence realizing a path of the given
// order; no ordering tricks, no symmetry pruning.
inline bool seq_search(const Graph& g, std::vector<bool>& used, std::vector<int>& seq, int order,
                       const std::vector<bool>* endpoints, auto&& on_complete) {
    if (static_cast<int>(seq.size()) == order) {
        if (endpoints && !(*endpoints)[static_cast<std::size_t>(seq.back())]) return false;
        return on_complete();
    }
    for (int v = 0; v < g.order(); ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (seq.empty()) {
            if (endpoints && !(*endpoints)[static_cast<std::size_t>(v)]) continue;
        } else if (!g.has_edge(seq.back(), v)) {
            continue;
        }
        used[static_cast<std::size_t>(v)] = true;
        seq.push_back(v);
        if (seq_search(g, used, seq, order, endpoints, on_complete)) return true;
        seq.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

inline bool pack_paths(const Graph& g, std::vector<bool>& used, const std::vector<int>& orders, std::size_t idx,
                       const std::vector<bool>* endpoints) {
    if (idx == orders.size()) return true;
    std::vector<int> seq;
    return seq_search(g, used, seq, orders[idx], endpoints,
                      [&] { return pack_paths(g, used, orders, idx + 1, endpoints); });
}

}  // namespace detail

inline bool contains_disjoint_paths(const Graph& g, const std::vector<int>& orders) {
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    return detail::pack_paths(g, used, orders, 0, nullptr);
}

inline bool contains_flower(const Graph& g, const FlowerSpec& spec) {
    std::vector<int> orders;
    for (int a : spec.half_lengths()) orders.push_back(2 * a);
    for (int u = 0; u < g.order(); ++u) {
        std::vector<bool> endpoints(static_cast<std::size_t>(g.order()), false);
        g.for_each_neighbor(u, [&](int v) { endpoints[static_cast<std::size_t>(v)] = true; });
        std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
        used[static_cast<std::size_t>(u)] = true;
        if (detail::pack_paths(g, used, orders, 0, &endpoints)) return true;
    }
    return false;
}

inline int longest_path_order(const Graph& g) {
    int best = g.order() >= 1 ? 1 : 0;
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    std::vector<int> seq;
    auto dfs = [&](auto&& self, int v) -> void {
        best = std::max(best, static_cast<int>(seq.size()));
        g.for_each_neighbor(v, [&](int w) {
            if (used[static_cast<std::size_t>(w)]) return;
            used[static_cast<std::size_t>(w)] = true;
            seq.push_back(w);
            self(self, w);
            seq.pop_back();
            used[static_cast<std::size_t>(w)] = false;
        });
    };
    for (int s = 0; s < g.order(); ++s) {
        used[static_cast<std::size_t>(s)] = true;
        seq.push_back(s);
        dfs(dfs, s);
        seq.pop_back();
        used[static_cast<std::size_t>(s)] = false;
    }
    return best;
}

inline int circumference(const Graph& g) {
    int best = 0;
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    auto dfs = [&](auto&& self, int start, int v, int len) -> void {
        if (len >= 3 && g.has_edge(v, start)) best = std::max(best, len);
        g.for_each_neighbor(v, [&](int w) {
            if (w <= start || used[static_cast<std::size_t>(w)]) return;
            used[static_cast<std::size_t>(w)] = true;
            self(self, start, w, len + 1);
            used[static_cast<std::size_t>(w)] = false;
        });
    };
    for (int s = 0; s < g.order(); ++s) {
        used[static_cast<std::size_t>(s)] = true;
        dfs(dfs, s, s, 1);
        used[static_cast<std::size_t>(s)] = false;
    }
    return best;
}

// Smallest-size vertex cover of size <= t by subset enumeration (n <= ~16).
inline std::optional<std::vector<int>> vertex_cover_at_most(const Graph& g, int t) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    g.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    for (int size = 0; size <= t; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        auto rec = [&](auto&& self, int from, int depth) -> bool {
            if (depth == size) {
                for (auto [u, v] : edges) {
                    bool covered = false;
                    for (int x : pick)
                        if (x == u || x == v) covered = true;
                    if (!covered) return false;
                }
                return true;
            }
            for (int v = from; v < n; ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                if (self(self, v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return pick;
    }
    return std::nullopt;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool ok = true;
        for (int u = 0; ok && u < n; ++u)
            for (int v = u + 1; ok && v < n; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Deterministic random graph for property tests.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    qflower::GraphBuilder b(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) b.add_edge(u, v);
    return b.build();
}

}  // namespace oracle
