#pragma once
// spectral.hpp — signless Laplacian spectral radius q(G) (largest eigenvalue
// of Q = D + A) and the closed forms and bounds the workbench compares it to.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qflower/errors.hpp"
#include "qflower/graph.hpp"
#include "qflower/graph6.hpp"

#include <json.hpp>

namespace qflower {

/// Converged dominant eigenpair of Q(G). `residual` is the infinity norm of
/// Q*x - value*x for the returned unit vector x.
struct SpectralResult {
    double value = 0.0;
    double residual = 0.0;
    std::uint64_t iterations = 0;
    std::vector<double> vector;
};

inline double default_power_tolerance(int n) { return n <= 500 ? 1e-10 : 1e-8; }

inline constexpr std::uint64_t power_iteration_cap = 1'000'000;

namespace detail {

// Power iteration on the Q matrix of a connected graph with at least one
// edge. Q is entrywise nonnegative with positive diagonal, hence primitive:
// the iteration converges to the Perron pair from any positive start. The
// start is the normalized degree vector, making the whole run deterministic.
inline SpectralResult power_iterate_component(const Graph& g, double tol) {
    int n = g.order();
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    double norm = 0;
    for (int v = 0; v < n; ++v) {
        x[static_cast<std::size_t>(v)] = g.degree(v);
        norm += x[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
    }
    norm = std::sqrt(norm);
    for (auto& e : x) e /= norm;

    double lambda = 0, resid = 0;
    for (std::uint64_t it = 1; it <= power_iteration_cap; ++it) {
        for (int v = 0; v < n; ++v) {
            double acc = g.degree(v) * x[static_cast<std::size_t>(v)];
            g.for_each_neighbor(v, [&](int u) { acc += x[static_cast<std::size_t>(u)]; });
            y[static_cast<std::size_t>(v)] = acc;
        }
        lambda = 0;
        for (int v = 0; v < n; ++v) lambda += x[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
        resid = 0;
        for (int v = 0; v < n; ++v)
            resid = std::max(resid, std::abs(y[static_cast<std::size_t>(v)] - lambda * x[static_cast<std::size_t>(v)]));
        if (resid <= tol) return {lambda, resid, it, std::move(x)};
        norm = 0;
        for (double e : y) norm += e * e;
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] / norm;
    }
    throw ConvergenceError("power iteration did not reach tolerance", lambda, resid, power_iteration_cap);
}

}  // namespace detail

/// q(G) with residual certificate. Disconnected graphs are decomposed and the
/// component maximum is returned (Q is block-diagonal, so iterating the whole
/// matrix could stall between blocks). tol = 0 picks the size default
/// (1e-10 up to n = 500, 1e-8 beyond).
inline SpectralResult q_radius(const Graph& g, double tol = 0.0) {
    if (g.order() < 1) throw DomainError("q_radius needs n >= 1");
    if (tol < 0) throw DomainError("q_radius tolerance must be positive");
    if (tol == 0) tol = default_power_tolerance(g.order());

    SpectralResult best;
    best.vector.assign(static_cast<std::size_t>(g.order()), 0.0);
    if (g.is_connected()) {
        if (g.edge_count() == 0) {  // K_1
            best.vector[0] = 1.0;
            return best;
        }
        return detail::power_iterate_component(g, tol);
    }

    std::uint64_t total_iters = 0;
    double worst_resid = 0;
    std::optional<std::vector<int>> best_comp;
    std::vector<double> best_vec;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) continue;  // isolated vertex contributes q = 0
        Graph sub = g.induced(comp);
        SpectralResult r = detail::power_iterate_component(sub, tol);
        total_iters += r.iterations;
        worst_resid = std::max(worst_resid, r.residual);
        if (r.value > best.value) {
            best.value = r.value;
            best_comp = comp;
            best_vec = std::move(r.vector);
        }
    }
    best.iterations = total_iters;
    best.residual = worst_resid;
    if (best_comp)
        for (std::size_t i = 0; i < best_comp->size(); ++i)
            best.vector[static_cast<std::size_t>((*best_comp)[i])] = best_vec[i];
    else
        best.vector[0] = 1.0;  // edgeless graph
    return best;
}

// ---------------------------------------------------------------------------
// Closed forms.

/// q(S_{n,t}) exactly: the equitable partition {clique, independent set}
/// reduces Q to a 2x2 quotient; q is the largest root of
/// q^2 - (n+2t-2) q + 2t(t-1) = 0.
inline double q_split_closed_form(int n, int t) {
    if (t < 1 || t > n) throw DomainError("q_split_closed_form needs 1 <= t <= n");
    if (n == 1) return 0.0;  // K_1: the quotient degenerates to one class
    double b = n + 2.0 * t - 2.0;
    return (b + std::sqrt(b * b - 8.0 * t * (t - 1.0))) / 2.0;
}

/// q for a connected graph whose non-increasing degree sequence is
/// (d1, d1, t, ..., t) with d1 = n-1, the shape of K_1 joined to a windmill:
///   (d1 + 2t - 1 + sqrt((2t - d1 + 1)^2 + 16(d1 - t))) / 2.
inline double q_two_dominant_closed_form(int n, int t, int d1) {
    if (d1 != n - 1 || d1 < t || t < 1) throw DomainError("q_two_dominant_closed_form needs d1 = n-1 >= t >= 1");
    double s = 2.0 * t - d1 + 1.0;
    return (d1 + 2.0 * t - 1.0 + std::sqrt(s * s + 16.0 * (d1 - t))) / 2.0;
}

// ---------------------------------------------------------------------------
// Upper and lower bounds.

/// Merris bound: q(G) <= max_v ( d(v) + (1/d(v)) * sum_{z in N(v)} d(z) ).
/// Requires minimum degree >= 1; strip isolated vertices first.
inline double merris_bound(const Graph& g) {
    if (g.order() < 1 || g.min_degree() < 1) throw DomainError("merris_bound needs minimum degree >= 1");
    double best = 0;
    for (int v = 0; v < g.order(); ++v) {
        double sum = 0;
        g.for_each_neighbor(v, [&](int u) { sum += g.degree(u); });
        best = std::max(best, g.degree(v) + sum / g.degree(v));
    }
    return best;
}

/// Das bound for connected graphs: q(G) <= 2e/(n-1) + n - 2.
inline double das_bound(const Graph& g) {
    if (g.order() < 2 || !g.is_connected()) throw DomainError("das_bound needs a connected graph with n >= 2");
    return 2.0 * static_cast<double>(g.edge_count()) / (g.order() - 1) + g.order() - 2;
}

/// Lower bound n+2t-2 - 2(t^2-t)/(n+2t-3) for q(S_{n,t}), valid (and itself
/// above n+2t-3) in the regime t >= 2, n > 5t^2.
inline double lemma24_lower_bound(int n, int t) {
    if (t < 2 || n <= 5 * t * t) throw DomainError("lemma24_lower_bound needs t >= 2 and n > 5t^2");
    return n + 2.0 * t - 2.0 - 2.0 * (static_cast<double>(t) * t - t) / (n + 2.0 * t - 3.0);
}

/// Edge threshold tn - t^2 + 1: any graph of order n with q(G) >= q(S_{n,t})
/// must have at least this many edges (same regime as above).
inline std::int64_t lemma24_edge_threshold(int n, int t) {
    return static_cast<std::int64_t>(t) * n - static_cast<std::int64_t>(t) * t + 1;
}

// ---------------------------------------------------------------------------
// Per-graph bound summary.

/// One row of the bounds table: q plus every applicable upper/lower bound.
/// merris is absent for edgeless graphs, das for disconnected ones,
/// split_lower only when the caller supplies t in its validity regime.
struct BoundReport {
    std::string graph6;
    int n = 0;
    std::int64_t edges = 0;
    double q = 0;
    std::optional<double> merris;
    std::optional<double> das;
    double delta_plus_one = 0;
    std::optional<double> split_lower;

    static std::string csv_header() { return "graph6,n,e,q,merris,das,delta_plus_one"; }

    std::string csv_row() const {
        char buf[64];
        auto fmt = [&buf](double x) {
            std::snprintf(buf, sizeof buf, "%.9f", x);
            return std::string(buf);
        };
        std::string row = graph6 + "," + std::to_string(n) + "," + std::to_string(edges) + "," + fmt(q) + ",";
        if (merris) row += fmt(*merris);
        row += ",";
        if (das) row += fmt(*das);
        row += "," + fmt(delta_plus_one);
        return row;
    }

    nlohmann::json to_json() const {
        nlohmann::json j{{"graph6", graph6}, {"n", n},
                         {"e", edges},      {"q", q},
                         {"merris", merris ? nlohmann::json(*merris) : nlohmann::json()},
                         {"das", das ? nlohmann::json(*das) : nlohmann::json()},
                         {"delta_plus_one", delta_plus_one}};
        if (split_lower) j["split_lower"] = *split_lower;
        return j;
    }
};

inline BoundReport make_bound_report(const Graph& g, std::optional<int> split_t = std::nullopt, double tol = 0.0) {
    BoundReport r;
    r.graph6 = to_graph6(g);
    r.n = g.order();
    r.edges = g.edge_count();
    r.q = q_radius(g, tol).value;
    r.delta_plus_one = g.max_degree() + 1.0;
    if (g.edge_count() > 0) {
        if (g.min_degree() >= 1) {
            r.merris = merris_bound(g);
        } else {
            std::vector<int> keep;
            for (int v = 0; v < g.order(); ++v)
                if (g.degree(v) > 0) keep.push_back(v);
            r.merris = merris_bound(g.induced(keep));
        }
    }
    if (g.order() >= 2 && g.is_connected()) r.das = das_bound(g);
    if (split_t && *split_t >= 2 && r.n > 5 * *split_t * *split_t) r.split_lower = lemma24_lower_bound(r.n, *split_t);
    return r;
}

}  // namespace qflower
