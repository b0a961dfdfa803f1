#pragma once
// search.hpp — graph-stream generation and ingestion plus the extremal
// search drivers (spectral radius and edge-count objectives).
//
// Streams are scanned in chunks by a small worker pool; per-chunk partial
// records are merged in chunk order, so results are independent of thread
// scheduling and identical to a serial scan.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qflower/errors.hpp"
#include "qflower/graph.hpp"
#include "qflower/graph6.hpp"
#include "qflower/spectral.hpp"
#include "qflower/subgraph.hpp"

#include <json.hpp>

namespace qflower {

inline constexpr char worker_env_var[] = "QFLOWER_WORKERS";

/// Worker pool size: QFLOWER_WORKERS if set, else hardware concurrency.
inline int worker_count() {
    if (const char* env = std::getenv(worker_env_var)) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 256);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 64u)) : 1;
}

// ---------------------------------------------------------------------------
// Labeled enumeration. Edge masks count up from 0; bit b of the mask is the
// b-th pair in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...

inline constexpr int labeled_enumeration_max_order = 7;

inline std::uint64_t labeled_graph_count(int n) {
    if (n < 0) throw DomainError("negative order");
    if (n > labeled_enumeration_max_order)
        throw CapabilityError("labeled enumeration is supported for n <= 7; ingest a graph6 stream instead");
    return std::uint64_t(1) << (n * (n - 1) / 2);
}

inline Graph labeled_graph_from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) b.add_edge(u, v);
    return b.build();
}

/// Visit labeled graphs for edge masks in [lo, hi), ascending.
template <class F>
void enumerate_labeled_range(int n, std::uint64_t lo, std::uint64_t hi, F&& f) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) f(labeled_graph_from_mask(n, mask));
}

/// Visit every labeled simple graph on n vertices exactly once (n <= 7).
template <class F>
void enumerate_labeled(int n, F&& f) {
    enumerate_labeled_range(n, 0, labeled_graph_count(n), std::forward<F>(f));
}

// ---------------------------------------------------------------------------
// graph6 stream ingestion.

enum class IngestPolicy { skip_bad_lines, abort_on_bad_line };

struct IngestIssue {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<IngestIssue> issues;  // skipped lines under skip_bad_lines
};

inline IngestResult ingest_stream(std::istream& in, IngestPolicy policy = IngestPolicy::abort_on_bad_line) {
    IngestResult out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty() || line == graph6_header) continue;
        try {
            out.graphs.push_back(from_graph6(line));
        } catch (const Error& e) {
            if (policy == IngestPolicy::abort_on_bad_line)
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
            out.issues.push_back({line_no, e.what()});
        }
    }
    return out;
}

inline IngestResult ingest_file(const std::string& path, IngestPolicy policy = IngestPolicy::abort_on_bad_line) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph6 file: " + path);
    return ingest_stream(in, policy);
}

// ---------------------------------------------------------------------------
// Extremal records.

enum class Objective { q, edges };

inline const char* objective_name(Objective o) { return o == Objective::q ? "q" : "edges"; }

/// Result of one extremal scan: the best objective value over a stream of
/// flower-free graphs, with all maximizers (up to tolerance) retained.
/// `witnesses` is deduplicated by an invariant fingerprint; the full labeled
/// list is kept in `witnesses_all`.
struct ExtremalRecord {
    ExtremalRecord(int order, FlowerSpec s, Objective obj) : n(order), spec(std::move(s)), objective(obj) {}

    int n;
    FlowerSpec spec;
    Objective objective;
    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<std::string> witnesses;
    std::vector<std::string> witnesses_all;
    std::vector<std::string> borderline;  // maximizers not exactly at the top value
    std::uint64_t scanned = 0;
    std::uint64_t free_count = 0;
    std::optional<double> split_closed_form;  // q(S_{n,t}) for the spec's t, when t <= n
    bool attains_split_bound = false;
    std::vector<std::pair<double, std::string>> near_bound;  // challenge graphs close to the split bound
    std::vector<std::string> violations;                     // challenge graphs exceeding it (falsification candidates)

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["n"] = n;
        j["spec"] = spec.half_lengths();
        j["t"] = spec.t();
        j["objective"] = objective_name(objective);
        if (scanned == 0 || free_count == 0)
            j["best_value"] = nullptr;
        else if (objective == Objective::edges)
            j["best_value"] = static_cast<std::int64_t>(best_value);
        else
            j["best_value"] = best_value;
        j["witnesses"] = witnesses;
        j["witnesses_all"] = witnesses_all;
        j["borderline"] = borderline;
        j["scanned"] = scanned;
        j["free_count"] = free_count;
        j["q_split_closed_form"] = split_closed_form ? nlohmann::json(*split_closed_form) : nlohmann::json();
        j["attains_split_bound"] = attains_split_bound;
        if (!near_bound.empty() || !violations.empty()) {
            j["near_bound"] = near_bound;
            j["violations"] = violations;
        }
        return j;
    }

    static std::string csv_header() { return "n,t,best_value,q_split_closed_form,match"; }

    std::string csv_row() const {
        char buf[64];
        std::string row = std::to_string(n) + "," + std::to_string(spec.t()) + ",";
        if (scanned > 0 && free_count > 0) {
            if (objective == Objective::edges) {
                row += std::to_string(static_cast<std::int64_t>(best_value));
            } else {
                std::snprintf(buf, sizeof buf, "%.9f", best_value);
                row += buf;
            }
        }
        row += ",";
        if (split_closed_form) {
            std::snprintf(buf, sizeof buf, "%.9f", *split_closed_form);
            row += buf;
        }
        row += ",";
        row += attains_split_bound ? "yes" : "no";
        return row;
    }
};

inline constexpr double maximizer_tolerance = 1e-8;

/// Isomorphism-invariant dedup key: sorted degree sequence plus the sorted
/// multiset of q values of all vertex-deleted subgraphs rounded to 1e-6.
/// Collisions merge only genuinely indistinguishable witnesses in reports.
inline std::string witness_fingerprint(const Graph& g) {
    std::string fp = "d:";
    for (int d : g.degree_sequence()) fp += std::to_string(d) + ",";
    std::vector<std::int64_t> qs;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < g.order(); ++u)
            if (u != v) keep.push_back(u);
        double qv = keep.empty() ? 0.0 : q_radius(g.induced(keep)).value;
        qs.push_back(std::llround(qv * 1e6));
    }
    std::sort(qs.begin(), qs.end());
    fp += "q:";
    for (auto x : qs) fp += std::to_string(x) + ",";
    return fp;
}

namespace detail {

struct ScanPartial {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, std::string>> candidates;
    std::vector<std::pair<double, std::string>> near_bound;
    std::uint64_t scanned = 0;
    std::uint64_t free_count = 0;

    void note(double value, const Graph& g, double slack, std::optional<double> near_floor) {
        if (value > best) {
            best = value;
            std::erase_if(candidates, [&](const auto& c) { return c.first < best - slack; });
        }
        if (value >= best - slack) candidates.emplace_back(value, to_graph6(g));
        if (near_floor && value >= *near_floor) near_bound.emplace_back(value, to_graph6(g));
    }

    void merge(ScanPartial&& other, double slack) {
        best = std::max(best, other.best);
        for (auto& c : other.candidates) candidates.push_back(std::move(c));
        std::erase_if(candidates, [&](const auto& c) { return c.first < best - slack; });
        for (auto& c : other.near_bound) near_bound.push_back(std::move(c));
        scanned += other.scanned;
        free_count += other.free_count;
    }
};

// Run chunk jobs on the worker pool; chunk c writes parts[c]. The fold over
// parts happens in index order, so the outcome is scheduling-independent.
template <class ChunkFn>
auto run_chunked(std::uint64_t chunk_count, int workers, ChunkFn fn) -> std::vector<decltype(fn(std::uint64_t{}))> {
    std::vector<decltype(fn(std::uint64_t{}))> parts(chunk_count);
    if (chunk_count == 0) return parts;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunk_count) return;
            try {
                parts[c] = fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lk(error_mu);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    int pool = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), chunk_count));
    if (pool <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(pool));
        for (int i = 0; i < pool; ++i) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return parts;
}

struct ScanConfig {
    Objective objective = Objective::q;
    bool connected_only = false;
    double slack = maximizer_tolerance;
    std::optional<double> near_floor;
    DetectorOptions detector;
    double q_tolerance = 0.0;
};

inline void scan_one(const Graph& g, const FlowerSpec& spec, const ScanConfig& cfg, ScanPartial& part) {
    ++part.scanned;
    if (cfg.connected_only && !g.is_connected()) return;
    auto det = contains_flower(g, spec, cfg.detector);
    if (det.status == Presence::budget_exceeded)
        throw BudgetExceededError("flower detector budget exceeded on graph " + to_graph6(g));
    if (det.status == Presence::found) return;
    ++part.free_count;
    double value = cfg.objective == Objective::edges ? static_cast<double>(g.edge_count())
                                                     : q_radius(g, cfg.q_tolerance).value;
    part.note(value, g, cfg.slack, cfg.near_floor);
}

inline ExtremalRecord finish_record(int n, const FlowerSpec& spec, const ScanConfig& cfg, ScanPartial&& total) {
    ExtremalRecord rec(n, spec, cfg.objective);
    rec.scanned = total.scanned;
    rec.free_count = total.free_count;
    if (spec.t() <= n && n >= 1) rec.split_closed_form = q_split_closed_form(n, spec.t());
    if (total.free_count == 0) return rec;
    rec.best_value = total.best;

    std::erase_if(total.candidates, [&](const auto& c) { return c.first < rec.best_value - cfg.slack; });
    std::sort(total.candidates.begin(), total.candidates.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::string> fingerprints;
    for (const auto& [value, g6] : total.candidates) {
        rec.witnesses_all.push_back(g6);
        if (rec.best_value - value > 1e-12 && cfg.objective == Objective::q) rec.borderline.push_back(g6);
        std::string fp = witness_fingerprint(from_graph6(g6));
        if (std::find(fingerprints.begin(), fingerprints.end(), fp) == fingerprints.end()) {
            fingerprints.push_back(fp);
            rec.witnesses.push_back(g6);
        }
    }
    if (rec.split_closed_form)
        rec.attains_split_bound = std::abs(rec.best_value - *rec.split_closed_form) <= maximizer_tolerance;

    std::sort(total.near_bound.begin(), total.near_bound.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    rec.near_bound = std::move(total.near_bound);
    if (cfg.near_floor && rec.split_closed_form) {
        for (const auto& [value, g6] : rec.near_bound)
            if (value > *rec.split_closed_form + maximizer_tolerance) rec.violations.push_back(g6);
    }
    return rec;
}

}  // namespace detail

/// Max q over the flower-free graphs of a stream; all graphs must share one
/// order. A detector budget overrun aborts the whole scan naming the graph
/// (soundness over completeness).
inline ExtremalRecord spectral_extremal_search(const std::vector<Graph>& graphs, const FlowerSpec& spec,
                                               bool connected_only = false, int workers = 0,
                                               DetectorOptions det = {}) {
    if (workers <= 0) workers = worker_count();
    int n = graphs.empty() ? 0 : graphs.front().order();
    for (const auto& g : graphs)
        if (g.order() != n) throw DomainError("spectral_extremal_search: graphs must share one order");
    detail::ScanConfig cfg;
    cfg.objective = Objective::q;
    cfg.connected_only = connected_only;
    cfg.detector = det;
    std::uint64_t chunk_size = 256;
    std::uint64_t chunks = (graphs.size() + chunk_size - 1) / chunk_size;
    auto parts = detail::run_chunked(chunks, workers, [&](std::uint64_t c) {
        detail::ScanPartial part;
        std::uint64_t lo = c * chunk_size, hi = std::min<std::uint64_t>(graphs.size(), lo + chunk_size);
        for (std::uint64_t i = lo; i < hi; ++i) detail::scan_one(graphs[i], spec, cfg, part);
        return part;
    });
    detail::ScanPartial total;
    for (auto& p : parts) total.merge(std::move(p), cfg.slack);
    return detail::finish_record(n, spec, cfg, std::move(total));
}

/// Same objective over the full labeled enumeration at order n (n <= 7).
inline ExtremalRecord spectral_extremal_search_labeled(int n, const FlowerSpec& spec, bool connected_only = false,
                                                       int workers = 0, DetectorOptions det = {}) {
    if (workers <= 0) workers = worker_count();
    std::uint64_t count = labeled_graph_count(n);
    detail::ScanConfig cfg;
    cfg.objective = Objective::q;
    cfg.connected_only = connected_only;
    cfg.detector = det;
    std::uint64_t chunk_size = 1 << 14;
    std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
    auto parts = detail::run_chunked(chunks, workers, [&](std::uint64_t c) {
        detail::ScanPartial part;
        enumerate_labeled_range(n, c * chunk_size, std::min(count, (c + 1) * chunk_size),
                                [&](const Graph& g) { detail::scan_one(g, spec, cfg, part); });
        return part;
    });
    detail::ScanPartial total;
    for (auto& p : parts) total.merge(std::move(p), cfg.slack);
    return detail::finish_record(n, spec, cfg, std::move(total));
}

/// Edge-count objective (the Turan number of the flower over the stream).
inline ExtremalRecord turan_search(const std::vector<Graph>& graphs, const FlowerSpec& spec, int workers = 0,
                                   DetectorOptions det = {}) {
    if (workers <= 0) workers = worker_count();
    int n = graphs.empty() ? 0 : graphs.front().order();
    for (const auto& g : graphs)
        if (g.order() != n) throw DomainError("turan_search: graphs must share one order");
    detail::ScanConfig cfg;
    cfg.objective = Objective::edges;
    cfg.slack = 0.0;
    cfg.detector = det;
    std::uint64_t chunk_size = 256;
    std::uint64_t chunks = (graphs.size() + chunk_size - 1) / chunk_size;
    auto parts = detail::run_chunked(chunks, workers, [&](std::uint64_t c) {
        detail::ScanPartial part;
        std::uint64_t lo = c * chunk_size, hi = std::min<std::uint64_t>(graphs.size(), lo + chunk_size);
        for (std::uint64_t i = lo; i < hi; ++i) detail::scan_one(graphs[i], spec, cfg, part);
        return part;
    });
    detail::ScanPartial total;
    for (auto& p : parts) total.merge(std::move(p), cfg.slack);
    return detail::finish_record(n, spec, cfg, std::move(total));
}

inline ExtremalRecord turan_search_labeled(int n, const FlowerSpec& spec, int workers = 0, DetectorOptions det = {}) {
    if (workers <= 0) workers = worker_count();
    std::uint64_t count = labeled_graph_count(n);
    detail::ScanConfig cfg;
    cfg.objective = Objective::edges;
    cfg.slack = 0.0;
    cfg.detector = det;
    std::uint64_t chunk_size = 1 << 14;
    std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
    auto parts = detail::run_chunked(chunks, workers, [&](std::uint64_t c) {
        detail::ScanPartial part;
        enumerate_labeled_range(n, c * chunk_size, std::min(count, (c + 1) * chunk_size),
                                [&](const Graph& g) { detail::scan_one(g, spec, cfg, part); });
        return part;
    });
    detail::ScanPartial total;
    for (auto& p : parts) total.merge(std::move(p), cfg.slack);
    return detail::finish_record(n, spec, cfg, std::move(total));
}

// ---------------------------------------------------------------------------
// Randomized falsification harness.

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// One greedy trial: visit the non-edges in a seeded random order, adding each
// unless the addition creates the forbidden flower. Every addition is checked
// with the edge-anchored detector, which is exact here because the graph was
// flower-free before the edge went in. The shuffle is hand-rolled so the
// order depends only on the seed, not on the standard library build.
inline Graph challenge_trial(int n, const FlowerSpec& spec, std::uint64_t seed, std::uint64_t trial,
                             DetectorOptions det) {
    std::mt19937_64 rng(mix64(seed ^ mix64(trial)));
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    Graph g = empty_graph(n);
    for (auto [u, v] : pairs) {
        Graph h = g.with_edge(u, v);
        auto r = contains_flower_using_edge(h, spec, u, v, det);
        if (r.status == Presence::budget_exceeded)
            throw BudgetExceededError("challenge detector budget exceeded at trial " + std::to_string(trial));
        if (r.status == Presence::absent) g = std::move(h);
    }
    return g;
}

}  // namespace detail

/// Seeded randomized greedy construction of maximal flower-free graphs.
/// Records the maximum q found; any graph beating q(S_{n,t}) by more than
/// the tolerance is flagged as a falsification candidate. Graphs within 0.5
/// of the bound are retained for structural inspection.
inline ExtremalRecord randomized_challenge(int n, const FlowerSpec& spec, int trials, std::uint64_t seed,
                                           int workers = 0, DetectorOptions det = {}) {
    if (n < 1 || n > Graph::max_order) throw DomainError("randomized_challenge order out of range");
    if (trials < 0) throw DomainError("randomized_challenge needs trials >= 0");
    if (workers <= 0) workers = worker_count();
    detail::ScanConfig cfg;
    cfg.objective = Objective::q;
    cfg.detector = det;
    if (spec.t() <= n) cfg.near_floor = q_split_closed_form(n, spec.t()) - 0.5;
    auto parts = detail::run_chunked(static_cast<std::uint64_t>(trials), workers, [&](std::uint64_t trial) {
        detail::ScanPartial part;
        Graph g = detail::challenge_trial(n, spec, seed, trial, det);
        ++part.scanned;
        ++part.free_count;  // flower-free by construction
        part.note(q_radius(g).value, g, cfg.slack, cfg.near_floor);
        return part;
    });
    detail::ScanPartial total;
    for (auto& p : parts) total.merge(std::move(p), cfg.slack);
    return detail::finish_record(n, spec, cfg, std::move(total));
}

}  // namespace qflower
