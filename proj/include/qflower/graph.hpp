#pragma once
// graph.hpp — immutable simple undirected graphs on dense bitset adjacency,
// plus constructors for every graph family the workbench studies.
//
// Vertex labels are contiguous 0..n-1. Constructors document their labeling
// so tests can address specific vertices (e.g. flower center = vertex 0).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qflower/errors.hpp"

namespace qflower {

class GraphBuilder;

/// Immutable simple undirected graph. Adjacency is one bitset row per vertex;
/// rows are symmetric and the diagonal is always clear. Safe to share across
/// threads once constructed.
class Graph {
public:
    static constexpr int max_order = 4096;

    Graph() = default;  // the order-0 graph

    int order() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return edges_; }
    int words_per_row() const noexcept { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return deg_[static_cast<std::size_t>(v)];
    }

    int max_degree() const { return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end()); }
    int min_degree() const { return deg_.empty() ? 0 : *std::min_element(deg_.begin(), deg_.end()); }

    /// Non-increasing degree sequence.
    std::vector<int> degree_sequence() const {
        std::vector<int> d = deg_;
        std::sort(d.begin(), d.end(), std::greater<int>());
        return d;
    }

    std::span<const std::uint64_t> neighbor_bits(int v) const {
        check_vertex(v);
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    template <class F>
    void for_each_neighbor(int v, F&& f) const {
        auto row = neighbor_bits(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[static_cast<std::size_t>(w)];
            while (bits) {
                int u = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                f(u);
            }
        }
    }

    std::vector<int> neighbor_list(int v) const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree(v)));
        for_each_neighbor(v, [&](int u) { out.push_back(u); });
        return out;
    }

    template <class F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) f(u, v);
            });
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        std::vector<int> comp = component_of(0);
        return static_cast<int>(comp.size()) == n_;
    }

    /// Vertices of the connected component containing v, ascending.
    std::vector<int> component_of(int v) const {
        check_vertex(v);
        std::vector<std::uint64_t> seen(static_cast<std::size_t>(words_), 0);
        std::vector<int> stack{v}, comp;
        seen[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            auto row = neighbor_bits(u);
            for (int w = 0; w < words_; ++w) {
                std::uint64_t fresh = row[static_cast<std::size_t>(w)] & ~seen[static_cast<std::size_t>(w)];
                seen[static_cast<std::size_t>(w)] |= fresh;
                while (fresh) {
                    stack.push_back((w << 6) + std::countr_zero(fresh));
                    fresh &= fresh - 1;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        return comp;
    }

    /// All connected components, each ascending, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const {
        std::vector<bool> done(static_cast<std::size_t>(n_), false);
        std::vector<std::vector<int>> out;
        for (int v = 0; v < n_; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            auto comp = component_of(v);
            for (int u : comp) done[static_cast<std::size_t>(u)] = true;
            out.push_back(std::move(comp));
        }
        return out;
    }

    /// Induced subgraph on `keep` (ascending or not; duplicates rejected).
    /// Vertex i of the result is keep[i].
    Graph induced(std::span<const int> keep) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// 2-coloring if bipartite (color per vertex, components colored
    /// independently starting with 0), or nullopt.
    std::optional<std::vector<int>> bipartition() const {
        std::vector<int> color(static_cast<std::size_t>(n_), -1);
        for (int s = 0; s < n_; ++s) {
            if (color[static_cast<std::size_t>(s)] != -1) continue;
            color[static_cast<std::size_t>(s)] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                bool odd = false;
                for_each_neighbor(u, [&](int v) {
                    int& c = color[static_cast<std::size_t>(v)];
                    if (c == -1) {
                        c = 1 - color[static_cast<std::size_t>(u)];
                        stack.push_back(v);
                    } else if (c == color[static_cast<std::size_t>(u)]) {
                        odd = true;
                    }
                });
                if (odd) return std::nullopt;
            }
        }
        return color;
    }

    /// Connected complete bipartite graph K_{r,s} spanning all n vertices?
    bool is_complete_bipartite() const {
        if (n_ < 2 || !is_connected()) return false;
        auto col = bipartition();
        if (!col) return false;
        std::int64_t r = std::count(col->begin(), col->end(), 0);
        std::int64_t s = n_ - r;
        return edges_ == r * s;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

private:
    friend class GraphBuilder;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex id out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::int64_t edges_ = 0;
    std::vector<std::uint64_t> bits_;  // n_ rows of words_ words
    std::vector<int> deg_;
};

/// Mutable edge-set staging area; `build()` snapshots an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n) {
        if (n < 0) throw DomainError("negative graph order");
        if (n > Graph::max_order) throw CapacityError("graph order " + std::to_string(n) + " over cap " + std::to_string(Graph::max_order));
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    }

    int order() const noexcept { return n_; }

    bool has_edge(int u, int v) const {
        check(u, v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
    }

    void remove_edge(int u, int v) {
        check(u, v);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ull << (v & 63));
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ull << (u & 63));
    }

    Graph build() const {
        Graph g;
        g.n_ = n_;
        g.words_ = words_;
        g.bits_ = bits_;
        g.deg_.resize(static_cast<std::size_t>(n_));
        std::int64_t total = 0;
        for (int v = 0; v < n_; ++v) {
            int d = 0;
            for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
            g.deg_[static_cast<std::size_t>(v)] = d;
            total += d;
        }
        g.edges_ = total / 2;
        return g;
    }

private:
    friend class Graph;

    void check(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DomainError("vertex id out of range");
        if (u == v) throw DomainError("self-loops are not allowed");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

inline Graph Graph::induced(std::span<const int> keep) const {
    GraphBuilder b(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (keep[i] == keep[j]) throw DomainError("duplicate vertex in induced set");
            if (has_edge(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return b.build();
}

inline Graph Graph::with_edge(int u, int v) const {
    GraphBuilder b(n_);
    b.bits_ = bits_;
    b.add_edge(u, v);
    return b.build();
}

inline Graph Graph::without_edge(int u, int v) const {
    GraphBuilder b(n_);
    b.bits_ = bits_;
    b.remove_edge(u, v);
    return b.build();
}

// ---------------------------------------------------------------------------
// Forbidden family parameters.

/// Parameters of the flower F_{a_1,...,a_k}: k cycles of odd lengths 2a_i+1
/// meeting in exactly one shared vertex. Stored sorted non-increasing;
/// t = sum a_i; the realized flower has order 2t+1.
class FlowerSpec {
public:
    explicit FlowerSpec(std::vector<int> half_lengths) : a_(std::move(half_lengths)) {
        if (a_.empty()) throw DomainError("flower spec needs k >= 1 cycles");
        for (int x : a_)
            if (x < 1) throw DomainError("flower spec entries must be >= 1");
        std::sort(a_.begin(), a_.end(), std::greater<int>());
        t_ = std::accumulate(a_.begin(), a_.end(), 0);
    }

    static FlowerSpec parse(const std::string& text) {
        std::vector<int> vals;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw DomainError("empty entry in flower spec '" + text + "'");
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw DomainError("bad entry '" + tok + "' in flower spec");
            }
            if (used != tok.size()) throw DomainError("bad entry '" + tok + "' in flower spec");
            vals.push_back(v);
        }
        return FlowerSpec(vals);
    }

    int k() const noexcept { return static_cast<int>(a_.size()); }
    int t() const noexcept { return t_; }
    int order() const noexcept { return 2 * t_ + 1; }  // order of the realized flower
    const std::vector<int>& half_lengths() const noexcept { return a_; }
    bool is_friendship() const noexcept { return a_.front() == 1; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(a_[i]);
        }
        return s;
    }

    bool operator==(const FlowerSpec& o) const { return a_ == o.a_; }

private:
    std::vector<int> a_;
    int t_ = 0;
};

// ---------------------------------------------------------------------------
// Graph families. Labelings:
//   complete_bipartite(r,s): side A = 0..r-1, side B = r..r+s-1
//   split_graph(n,t):        clique = 0..t-1, independent set = t..n-1
//   windmill(r,t):           center = 0, blade j = 1+j*t .. (j+1)*t
//   flower(spec):            center = 0, cycle i uses the next 2*a_i vertices
//   join/disjoint_union:     g keeps its ids, h is shifted by g.order()

inline Graph empty_graph(int n) { return GraphBuilder(n).build(); }

inline Graph complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

inline Graph path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

inline Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle needs n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

inline Graph complete_bipartite(int r, int s) {
    if (r < 0 || s < 0) throw DomainError("complete_bipartite needs r,s >= 0");
    GraphBuilder b(r + s);
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) b.add_edge(u, r + v);
    return b.build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
    GraphBuilder b(g.order() + h.order());
    g.for_each_edge([&](int u, int v) { b.add_edge(u, v); });
    int off = g.order();
    h.for_each_edge([&](int u, int v) { b.add_edge(off + u, off + v); });
    return b.build();
}

inline Graph join(const Graph& g, const Graph& h) {
    GraphBuilder b(g.order() + h.order());
    g.for_each_edge([&](int u, int v) { b.add_edge(u, v); });
    int off = g.order();
    h.for_each_edge([&](int u, int v) { b.add_edge(off + u, off + v); });
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) b.add_edge(u, off + v);
    return b.build();
}

inline Graph disjoint_copies(int m, const Graph& g) {
    if (m < 0) throw DomainError("disjoint_copies needs m >= 0");
    GraphBuilder b(m * g.order());
    for (int c = 0; c < m; ++c) {
        int off = c * g.order();
        g.for_each_edge([&](int u, int v) { b.add_edge(off + u, off + v); });
    }
    return b.build();
}

/// S_{n,t}: K_t joined to an independent set of n-t vertices.
inline Graph split_graph(int n, int t) {
    if (t < 1 || t > n) throw DomainError("split_graph needs 1 <= t <= n");
    GraphBuilder b(n);
    for (int u = 0; u < t; ++u) {
        for (int v = u + 1; v < t; ++v) b.add_edge(u, v);
        for (int v = t; v < n; ++v) b.add_edge(u, v);
    }
    return b.build();
}

/// L_{r,t}: r copies of K_t joined to a single shared vertex, i.e. r cliques
/// K_{t+1} meeting in exactly the center.
inline Graph windmill(int r, int t) {
    if (r < 1 || t < 1) throw DomainError("windmill needs r,t >= 1");
    GraphBuilder b(r * t + 1);
    for (int blade = 0; blade < r; ++blade) {
        int base = 1 + blade * t;
        for (int i = 0; i < t; ++i) {
            b.add_edge(0, base + i);
            for (int j = i + 1; j < t; ++j) b.add_edge(base + i, base + j);
        }
    }
    return b.build();
}

/// F_{a_1,...,a_k}: k odd cycles of lengths 2a_i+1 through center 0.
inline Graph flower(const FlowerSpec& spec) {
    GraphBuilder b(spec.order());
    int next = 1;
    for (int a : spec.half_lengths()) {
        int len = 2 * a;  // vertices of this cycle besides the center
        b.add_edge(0, next);
        for (int i = 0; i + 1 < len; ++i) b.add_edge(next + i, next + i + 1);
        b.add_edge(next + len - 1, 0);
        next += len;
    }
    return b.build();
}

/// F^(k): the friendship graph, k triangles through one vertex.
inline Graph friendship(int k) {
    if (k < 1) throw DomainError("friendship needs k >= 1");
    return flower(FlowerSpec(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

namespace detail {

// Greedy circulant graph on m = 2k-1 vertices with max degree k-1 and
// floor(m(k-1)/2) = k^2 - 3k/2 edges (k even): walk distance classes in
// order, adding an edge whenever both endpoints still have spare degree.
inline void embed_even_friendship_block(GraphBuilder& b, int k) {
    int m = 2 * k - 1;
    int target = k - 1;
    std::vector<int> deg(static_cast<std::size_t>(m), 0);
    for (int d = 1; d <= (m - 1) / 2; ++d) {
        for (int i = 0; i < m; ++i) {
            int j = (i + d) % m;
            if (deg[static_cast<std::size_t>(i)] < target && deg[static_cast<std::size_t>(j)] < target && !b.has_edge(i, j)) {
                b.add_edge(i, j);
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
            }
        }
    }
}

}  // namespace detail

/// Friendship-extremal construction: balanced complete bipartite graph with
/// side A = 0..ceil(n/2)-1, plus an embedding in A's lowest-numbered
/// vertices: two disjoint K_k for odd k, or the greedy circulant block with
/// 2k-1 vertices, k^2-3k/2 edges and max degree k-1 for even k.
inline Graph efgg_extremal(int n, int k) {
    if (k < 1) throw DomainError("efgg_extremal needs k >= 1");
    if (n < 4 * k) throw DomainError("efgg_extremal needs n >= 4k");
    int half = (n + 1) / 2;
    GraphBuilder b(n);
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v) b.add_edge(u, v);
    if (k % 2 == 1) {
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) b.add_edge(c * k + i, c * k + j);
    } else {
        detail::embed_even_friendship_block(b, k);
    }
    return b.build();
}

/// Intersecting-odd-cycle-extremal construction: balanced complete bipartite
/// graph with K_{k-1,k-1} embedded in side A (parts 0..k-2 and k-1..2k-3).
inline Graph hks_extremal(int n, int k) {
    if (k < 2) throw DomainError("hks_extremal needs k >= 2");
    if (n < 4 * k) throw DomainError("hks_extremal needs n >= 4k");
    int half = (n + 1) / 2;
    GraphBuilder b(n);
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v) b.add_edge(u, v);
    for (int i = 0; i < k - 1; ++i)
        for (int j = 0; j < k - 1; ++j) b.add_edge(i, k - 1 + j);
    return b.build();
}

}  // namespace qflower
