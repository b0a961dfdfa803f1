// acceptance — the workbench's acceptance suite. Each criterion prints one
// PASS/FAIL line; the exit code is the number of failing criteria. Run with
// no arguments for the full suite or with criterion numbers to run a subset.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "qflower/qflower.hpp"

#include "oracle.hpp"

using namespace qflower;

namespace {

struct Criterion {
    int id;
    const char* title;
    bool (*run)(std::string& detail);
};

std::string fixture_path() { return std::string(QFLOWER_FIXTURE_DIR) + "/g8.g6"; }

// 1. Triangle spectral extremal: exhaustive labeled search at n = 5, 6, 7
//    gives max q = n exactly, all maximizers complete bipartite.
bool criterion_1(std::string& detail) {
    for (int n = 5; n <= 7; ++n) {
        auto rec = spectral_extremal_search_labeled(n, FlowerSpec({1}));
        if (std::abs(rec.best_value - n) > 1e-8) {
            detail = "n=" + std::to_string(n) + ": max q = " + std::to_string(rec.best_value);
            return false;
        }
        for (const auto& g6 : rec.witnesses_all) {
            if (!from_graph6(g6).is_complete_bipartite()) {
                detail = "n=" + std::to_string(n) + ": non-complete-bipartite maximizer " + g6;
                return false;
            }
        }
        detail += "n=" + std::to_string(n) + ":q=" + std::to_string(n) + ",witnesses=" +
                  std::to_string(rec.witnesses_all.size()) + " ";
    }
    return true;
}

// 2. Friendship spectral extremal at the order-8 threshold: over all 12346
//    isomorphism classes, the bowtie-free maximum is q(S_{8,2}) with S_{8,2}
//    the unique maximizer.
bool criterion_2(std::string& detail) {
    auto fixture = ingest_file(fixture_path());
    if (fixture.graphs.size() != 12346) {
        detail = "fixture has " + std::to_string(fixture.graphs.size()) + " graphs, expected 12346";
        return false;
    }
    auto rec = spectral_extremal_search(fixture.graphs, FlowerSpec({1, 1}));
    double expect = (10.0 + std::sqrt(84.0)) / 2.0;
    if (std::abs(rec.best_value - expect) > 1e-8) {
        detail = "max q = " + std::to_string(rec.best_value) + ", expected " + std::to_string(expect);
        return false;
    }
    if (rec.witnesses_all.size() != 1) {
        detail = std::to_string(rec.witnesses_all.size()) + " maximizers, expected a unique one";
        return false;
    }
    Graph w = from_graph6(rec.witnesses_all.front());
    if (!qflower::detail::is_exact_split_graph(w, 2) || !oracle::isomorphic(w, split_graph(8, 2))) {
        detail = "maximizer " + rec.witnesses_all.front() + " is not S_{8,2}";
        return false;
    }
    detail = "max q = 9.582575695, unique maximizer S_{8,2}, free count " + std::to_string(rec.free_count);
    return true;
}

// 3. Turan sanity: ex(n, C_3) = floor(n^2/4) for n = 4..7.
bool criterion_3(std::string& detail) {
    const std::int64_t expect[] = {4, 6, 9, 12};
    for (int n = 4; n <= 7; ++n) {
        auto rec = turan_search_labeled(n, FlowerSpec({1}));
        std::int64_t got = static_cast<std::int64_t>(rec.best_value);
        if (got != expect[n - 4]) {
            detail = "ex(" + std::to_string(n) + ",C3) = " + std::to_string(got) + ", expected " +
                     std::to_string(expect[n - 4]);
            return false;
        }
        detail += "ex(" + std::to_string(n) + ")=" + std::to_string(got) + " ";
    }
    return true;
}

// 4. Split bound chain for 2 <= t <= 6, 5t^2 < n <= 500, with closed form
//    and eigensolver in 1e-8 agreement.
bool criterion_4(std::string& detail) {
    auto rep = check_lemma_2_4({2, 6}, {1, 500});
    detail = std::to_string(rep.instances) + " (t,n) pairs";
    if (!rep.passed()) detail = rep.to_text();
    return rep.passed();
}

// 5. Apex-over-windmill stays below n+2t-3 for 3 <= t <= 6, 1 <= r <= 20;
//    anchor q(K_1 join L_{2,2}) = 8 < 9.
bool criterion_5(std::string& detail) {
    auto rep = check_lemma_2_5({3, 6}, {1, 20});
    if (!rep.passed()) {
        detail = rep.to_text();
        return false;
    }
    double anchor = q_radius(join(complete(1), windmill(2, 2))).value;
    if (std::abs(anchor - 8.0) > 1e-8 || !(8.0 < 9.0)) {
        detail = "anchor q = " + std::to_string(anchor) + ", expected 8";
        return false;
    }
    detail = std::to_string(rep.instances) + " (t,r) pairs; anchor q(K_1 join L_{2,2}) = 8 < 9";
    return true;
}

// 6. Bound sandwich on 1e5 uniformly sampled labeled graphs (n <= 7,
//    connected) plus every constructed family instance.
bool criterion_6(std::string& detail) {
    std::mt19937_64 rng(2024);
    std::uint64_t connected = 0;
    for (int i = 0; i < 100000; ++i) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::uint64_t mask = rng() & ((std::uint64_t(1) << (n * (n - 1) / 2)) - 1);
        Graph g = labeled_graph_from_mask(n, mask);
        if (!g.is_connected()) continue;
        ++connected;
        double q = q_radius(g).value;
        double hi = std::min(merris_bound(g), das_bound(g));
        if (q < g.max_degree() + 1 - 1e-9 || q > hi + 1e-9) {
            detail = "sandwich violated on " + to_graph6(g);
            return false;
        }
    }
    std::vector<Graph> family;
    for (int n : {5, 9, 20, 75})
        for (int t = 1; t <= std::min(n, 6); ++t) family.push_back(split_graph(n, t));
    for (int r = 1; r <= 4; ++r)
        for (int t = 1; t <= 4; ++t) family.push_back(windmill(r, t));
    for (auto a : std::vector<std::vector<int>>{{1}, {1, 1}, {2}, {2, 1}, {3, 2, 1}}) family.push_back(flower(FlowerSpec(a)));
    for (int k = 1; k <= 3; ++k) {
        family.push_back(efgg_extremal(4 * k + 9, k));
        if (k >= 2) family.push_back(hks_extremal(4 * k + 9, k));
        family.push_back(friendship(k));
    }
    for (const auto& g : family) {
        double q = q_radius(g).value;
        double hi = std::min(merris_bound(g), das_bound(g));
        if (q < g.max_degree() + 1 - 1e-9 || q > hi + 1e-9) {
            detail = "sandwich violated on constructed " + to_graph6(g);
            return false;
        }
    }
    detail = std::to_string(connected) + " connected samples + " + std::to_string(family.size()) +
             " constructed instances";
    return true;
}

// 7. Detector oracle equivalence: all labeled graphs at n <= 6 and 1e4
//    random graphs at each of n = 7, 8, for specs 1 / 1,1 / 2 / 2,1.
bool criterion_7(std::string& detail) {
    const std::vector<FlowerSpec> specs{FlowerSpec({1}), FlowerSpec({1, 1}), FlowerSpec({2}), FlowerSpec({2, 1})};
    std::atomic<std::uint64_t> bad{0};
    std::uint64_t compared = 0;

    auto compare_one = [&](const Graph& g) {
        for (const auto& spec : specs) {
            bool mine = contains_flower(g, spec).status == Presence::found;
            if (mine != oracle::contains_flower(g, spec)) {
                bad.fetch_add(1);
                return;
            }
            std::vector<int> orders;
            for (int a : spec.half_lengths()) orders.push_back(2 * a);
            bool packed = contains_disjoint_paths(g, orders).status == Presence::found;
            if (packed != oracle::contains_disjoint_paths(g, orders)) {
                bad.fetch_add(1);
                return;
            }
        }
    };

    for (int n = 0; n <= 6; ++n) {
        std::uint64_t count = labeled_graph_count(n);
        std::uint64_t chunk = 1 << 11;
        std::uint64_t chunks = (count + chunk - 1) / chunk;
        qflower::detail::run_chunked(chunks, worker_count(), [&](std::uint64_t c) {
            enumerate_labeled_range(n, c * chunk, std::min(count, (c + 1) * chunk), compare_one);
            return 0;
        });
        compared += count;
    }
    for (int n = 7; n <= 8; ++n) {
        const int samples = 10000;
        qflower::detail::run_chunked(100, worker_count(), [&](std::uint64_t c) {
            std::mt19937_64 rng(900 + 31 * n + c);
            for (int i = 0; i < samples / 100; ++i) {
                double p = 0.15 + 0.14 * static_cast<double>(i % 5);
                compare_one(oracle::random_graph(n, p, rng));
            }
            return 0;
        });
        compared += samples;
    }
    detail = std::to_string(compared) + " graphs x 4 specs x 2 detectors, " + std::to_string(bad.load()) +
             " disagreements";
    return bad.load() == 0;
}

// 8. Exhaustive edge-bound checks at n <= 7 with equality structure.
bool criterion_8(std::string& detail) {
    std::vector<CheckReport> reps;
    reps.push_back(check_lemma_2_1({1, 6}, {4, 4}));
    reps.push_back(check_lemma_2_1({1, 7}, {5, 5}));
    reps.push_back(check_lemma_2_2({1, 7}, {3, 3}));
    reps.push_back(check_lemma_2_2({1, 6}, {4, 4}));
    reps.push_back(check_lemma_2_6({1, 7}));
    for (const auto& rep : reps) {
        if (!rep.passed()) {
            detail = rep.to_text();
            return false;
        }
        detail += rep.id + "[" + rep.params + "]:" + std::to_string(rep.instances) + " ";
    }
    return true;
}

// 9. Falsification harness: seeded random maximal flower-free graphs never
//    beat q(S_{n,t}), and every maximizer within 0.5 of the bound has a
//    dominating vertex.
bool criterion_9(std::string& detail) {
    struct Setup {
        int n;
        FlowerSpec spec;
        int trials;
    };
    const Setup setups[] = {{17, FlowerSpec({1, 1}), 500}, {45, FlowerSpec({2, 1}), 200}};
    for (const auto& s : setups) {
        auto rec = randomized_challenge(s.n, s.spec, s.trials, 1);
        if (!rec.violations.empty()) {
            detail = "falsification candidate at n=" + std::to_string(s.n) + ": " + rec.violations.front();
            return false;
        }
        std::vector<Graph> near;
        for (const auto& [value, g6] : rec.near_bound) near.push_back(from_graph6(g6));
        auto rep = check_lemma_3_1_conclusion(near, s.spec, 0.5);
        if (!rep.passed()) {
            detail = rep.to_text();
            return false;
        }
        detail += "n=" + std::to_string(s.n) + ":max=" + std::to_string(rec.best_value) + "/bound=" +
                  std::to_string(rec.split_closed_form.value_or(0)) + ",near=" + std::to_string(near.size()) + " ";
    }
    return true;
}

const Criterion kCriteria[] = {
    {1, "triangle spectral extremal, n=5..7 labeled", criterion_1},
    {2, "friendship spectral extremal over the order-8 fixture", criterion_2},
    {3, "triangle Turan numbers, n=4..7", criterion_3},
    {4, "split bound chain sweep, t=2..6, n<=500", criterion_4},
    {5, "apex-over-windmill sweep, t=3..6, r=1..20", criterion_5},
    {6, "bound sandwich on samples and constructed families", criterion_6},
    {7, "detector oracle equivalence", criterion_7},
    {8, "path/cycle/mindegree exhaustive checks, n<=7", criterion_8},
    {9, "randomized falsification harness", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    int failures = 0;
    for (const auto& c : kCriteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d [%s]: %s%s%s\n", c.id, c.title, ok ? "PASS" : "FAIL",
                    detail.empty() ? "" : " — ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
