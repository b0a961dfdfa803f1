// qflower — command-line front end for the workbench: construct graph
// families, compute signless Laplacian spectral radii and bounds, test
// flower-freeness, run extremal searches, and run the named checks.
//
// Exit codes: 0 success, 1 I/O or parse error (or a failed check),
// 2 usage error, 3 containment found where freeness was asserted,
// 4 detector budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qflower/qflower.hpp"

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_usage = 2;
constexpr int exit_contains = 3;
constexpr int exit_budget = 4;

qflower::IntRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw qflower::DomainError("expected INT or LO..HI, got '" + text + "'");
    }
}

void write_json_report(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw qflower::Error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

struct ConstructArgs {
    std::string family;
    int n = 0, t = 0, r = 0, k = 0;
    std::string a;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    using namespace qflower;
    Graph g;
    if (args.family == "split") {
        g = split_graph(args.n, args.t);
    } else if (args.family == "windmill") {
        g = windmill(args.r, args.t);
    } else if (args.family == "flower") {
        g = flower(FlowerSpec::parse(args.a));
    } else if (args.family == "friendship") {
        g = friendship(args.k);
    } else if (args.family == "efgg") {
        g = efgg_extremal(args.n, args.k);
    } else if (args.family == "hks") {
        g = hks_extremal(args.n, args.k);
    } else {
        throw DomainError("unknown family: " + args.family);
    }
    std::string line = to_graph6(g);
    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw Error("cannot open output file: " + args.out);
        out << line << "\n";
    } else {
        std::printf("%s\n", line.c_str());
    }
    std::printf("n=%d e=%lld delta=%d Delta=%d\n", g.order(), static_cast<long long>(g.edge_count()),
                g.min_degree(), g.max_degree());
    return exit_ok;
}

int run_q(const std::string& in_path, bool bounds, double tol) {
    using namespace qflower;
    auto res = ingest_file(in_path, IngestPolicy::abort_on_bad_line);
    if (bounds) {
        std::printf("%s\n", BoundReport::csv_header().c_str());
        for (const auto& g : res.graphs) {
            auto rep = make_bound_report(g, std::nullopt, tol);
            std::printf("%s\n", rep.csv_row().c_str());
        }
    } else {
        for (const auto& g : res.graphs) std::printf("%.9f\n", q_radius(g, tol).value);
    }
    return exit_ok;
}

int run_free_check(const std::string& in_path, const std::string& spec_text, bool witness, std::uint64_t budget) {
    using namespace qflower;
    FlowerSpec spec = FlowerSpec::parse(spec_text);
    auto res = ingest_file(in_path, IngestPolicy::abort_on_bad_line);
    DetectorOptions det{budget};
    bool any_contains = false;
    for (const auto& g : res.graphs) {
        auto r = contains_flower(g, spec, det);
        if (r.status == Presence::budget_exceeded) {
            std::fprintf(stderr, "budget exceeded on graph %s\n", to_graph6(g).c_str());
            return exit_budget;
        }
        if (r.status == Presence::found) {
            any_contains = true;
            if (witness)
                std::printf("CONTAINS %s\n", r.witness->to_json().dump().c_str());
            else
                std::printf("CONTAINS\n");
        } else {
            std::printf("FREE\n");
        }
    }
    return any_contains ? exit_contains : exit_ok;
}

struct SearchArgs {
    int n = 0;
    std::string spec;
    bool labeled = false;
    std::string in_path;
    std::string objective = "q";
    bool connected_only = false;
    std::string out;
    int workers = 0;
};

int run_search(const SearchArgs& args, const json& config) {
    using namespace qflower;
    FlowerSpec spec = FlowerSpec::parse(args.spec);
    std::optional<ExtremalRecord> rec;
    if (args.labeled && !args.in_path.empty()) throw DomainError("choose one of --labeled / --in");
    if (!args.labeled && args.in_path.empty()) {
        if (args.n > labeled_enumeration_max_order)
            throw CapabilityError("n > 7 requires a graph6 stream (--in)");
        // labeled is the only built-in stream
    }
    if (args.in_path.empty()) {
        if (args.objective == "edges")
            rec = turan_search_labeled(args.n, spec, args.workers);
        else
            rec = spectral_extremal_search_labeled(args.n, spec, args.connected_only, args.workers);
    } else {
        auto in = ingest_file(args.in_path, IngestPolicy::abort_on_bad_line);
        if (args.objective == "edges")
            rec = turan_search(in.graphs, spec, args.workers);
        else
            rec = spectral_extremal_search(in.graphs, spec, args.connected_only, args.workers);
    }
    if (rec->free_count > 0) {
        if (rec->objective == Objective::edges)
            std::printf("best_value=%lld", static_cast<long long>(rec->best_value));
        else
            std::printf("best_value=%.9f", rec->best_value);
    } else {
        std::printf("best_value=none");
    }
    if (rec->split_closed_form)
        std::printf(" q_split_closed_form=%.9f match=%s", *rec->split_closed_form,
                    rec->attains_split_bound ? "yes" : "no");
    std::printf(" scanned=%llu free=%llu witnesses=%zu\n", static_cast<unsigned long long>(rec->scanned),
                static_cast<unsigned long long>(rec->free_count), rec->witnesses.size());
    if (!args.out.empty()) {
        json j = rec->to_json();
        j["config"] = config;
        write_json_report(args.out, j);
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string check;
    std::string n, t, r, k;
    std::string spec;
    int trials = 0;
    std::uint64_t seed = 1;
    std::string fixture;
    bool desk = false;
    bool labeled = false;
    std::string in_path;
    std::string out;
    int workers = 0;
};

int run_verify(const VerifyArgs& args, const json& config) {
    using namespace qflower;
    std::vector<CheckReport> reports;
    auto range_or = [&](const std::string& text, IntRange def) { return text.empty() ? def : parse_range(text); };

    if (args.check == "all") {
        DeskOptions opt;
        opt.fixture_path = args.fixture;
        opt.seed = args.seed;
        opt.workers = args.workers;
        if (args.trials > 0) {
            opt.trials_t2 = args.trials;
            opt.trials_t3 = args.trials;
        }
        reports = run_desk_suite(opt);
        if (args.fixture.empty())
            std::fprintf(stderr, "note: no --fixture given; the order-8 isomorph-free stream check was skipped\n");
    } else if (args.check == "lemma2.1") {
        if (args.n.empty() && args.k.empty()) {
            reports.push_back(check_lemma_2_1({1, 6}, {4, 4}, args.workers));
            reports.push_back(check_lemma_2_1({1, 7}, {5, 5}, args.workers));
        } else {
            reports.push_back(check_lemma_2_1(range_or(args.n, {1, 6}), range_or(args.k, {4, 4}), args.workers));
        }
    } else if (args.check == "lemma2.2") {
        if (args.n.empty() && args.k.empty()) {
            reports.push_back(check_lemma_2_2({1, 7}, {3, 3}, args.workers));
            reports.push_back(check_lemma_2_2({1, 6}, {4, 4}, args.workers));
        } else {
            reports.push_back(check_lemma_2_2(range_or(args.n, {1, 7}), range_or(args.k, {3, 3}), args.workers));
        }
    } else if (args.check == "lemma2.6") {
        reports.push_back(check_lemma_2_6(range_or(args.n, {1, 7}), args.workers));
    } else if (args.check == "lemma2.4") {
        reports.push_back(check_lemma_2_4(range_or(args.t, {2, 6}), range_or(args.n, {1, 500}), args.workers));
    } else if (args.check == "lemma2.5") {
        reports.push_back(check_lemma_2_5(range_or(args.t, {3, 6}), range_or(args.r, {1, 20}), args.workers));
    } else if (args.check == "lemma3.1") {
        FlowerSpec spec = FlowerSpec::parse(args.spec.empty() ? "1,1" : args.spec);
        int n = args.n.empty() ? 8 * spec.t() * spec.t() - 12 * spec.t() + 9 : parse_range(args.n).lo;
        int trials = args.trials > 0 ? args.trials : 200;
        auto rec = randomized_challenge(n, spec, trials, args.seed, args.workers);
        std::vector<Graph> near;
        for (const auto& [value, g6] : rec.near_bound) near.push_back(from_graph6(g6));
        reports.push_back(check_lemma_3_1_conclusion(near, spec, 0.5));
    } else if (args.check == "lemma3.2") {
        FlowerSpec spec = FlowerSpec::parse(args.spec.empty() ? "1,1" : args.spec);
        reports.push_back(check_lemma_3_2_enumerated(range_or(args.n, {1, 7}), spec, args.workers));
    } else if (args.check == "theorem") {
        FlowerSpec spec = FlowerSpec::parse(args.spec.empty() ? "1" : args.spec);
        if (!args.in_path.empty()) {
            auto in = ingest_file(args.in_path, IngestPolicy::abort_on_bad_line);
            reports.push_back(check_theorem_main_stream(in.graphs, spec, true, args.workers));
        } else if (args.trials > 0) {
            int n = args.n.empty() ? 8 * spec.t() * spec.t() - 12 * spec.t() + 9 : parse_range(args.n).lo;
            reports.push_back(check_theorem_main_challenge(n, spec, args.trials, args.seed, args.workers));
        } else {
            IntRange nr = range_or(args.n, {5, 7});
            for (int n = nr.lo; n <= nr.hi; ++n)
                reports.push_back(check_theorem_main_labeled(n, spec, args.workers));
        }
    } else if (args.check == "turan") {
        reports.push_back(check_turan_constructions(range_or(args.n, {4, 24}), range_or(args.k, {1, 3}), args.workers));
    } else {
        throw DomainError("unknown check: " + args.check);
    }

    bool all_pass = true;
    for (const auto& rep : reports) {
        std::printf("%s\n", rep.to_text().c_str());
        all_pass = all_pass && rep.passed();
    }
    if (!args.out.empty()) {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(rep.to_json());
        write_json_report(args.out, json{{"config", config}, {"reports", arr}});
    }
    return all_pass ? exit_ok : exit_io;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qflower: spectral extremal workbench for graphs without intersecting odd cycles"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "worker pool size (default: QFLOWER_WORKERS or hardware)");

    ConstructArgs cons;
    auto* c_cmd = app.add_subcommand("construct", "build a named graph family member, write graph6");
    c_cmd->add_option("--family", cons.family, "split|windmill|flower|efgg|hks|friendship")->required();
    c_cmd->add_option("--n", cons.n, "order");
    c_cmd->add_option("--t", cons.t, "clique/blade size");
    c_cmd->add_option("--r", cons.r, "blade count");
    c_cmd->add_option("--k", cons.k, "cycle count");
    c_cmd->add_option("--a", cons.a, "flower half-lengths, e.g. 2,1");
    c_cmd->add_option("--out", cons.out, "output file (default stdout)");

    std::string q_in;
    bool q_bounds = false;
    double q_tol = 0.0;
    auto* q_cmd = app.add_subcommand("q", "signless Laplacian spectral radius per graph");
    q_cmd->add_option("--in", q_in, "graph6 file")->required();
    q_cmd->add_flag("--bounds", q_bounds, "emit bound-report CSV rows");
    q_cmd->add_option("--tol", q_tol, "residual tolerance override");

    std::string f_in, f_spec;
    bool f_witness = false;
    std::uint64_t f_budget = qflower::DetectorOptions{}.budget;
    auto* f_cmd = app.add_subcommand("free-check", "flower containment per graph");
    f_cmd->add_option("--in", f_in, "graph6 file")->required();
    f_cmd->add_option("--spec", f_spec, "flower half-lengths, e.g. 1,1")->required();
    f_cmd->add_flag("--witness", f_witness, "print witness JSON for CONTAINS lines");
    f_cmd->add_option("--budget", f_budget, "detector node budget");

    SearchArgs sea;
    auto* s_cmd = app.add_subcommand("search", "extremal search over a graph stream");
    s_cmd->add_option("--n", sea.n, "order (labeled enumeration)");
    s_cmd->add_option("--spec", sea.spec, "flower half-lengths")->required();
    s_cmd->add_flag("--labeled", sea.labeled, "use full labeled enumeration (n <= 7)");
    s_cmd->add_option("--in", sea.in_path, "graph6 fixture stream");
    s_cmd->add_option("--objective", sea.objective, "q|edges")->check(CLI::IsMember({"q", "edges"}));
    s_cmd->add_flag("--connected-only", sea.connected_only, "skip disconnected graphs");
    s_cmd->add_option("--out", sea.out, "write the record JSON here");

    VerifyArgs ver;
    auto* v_cmd = app.add_subcommand("verify", "run named checks");
    v_cmd->add_option("--check", ver.check,
                      "lemma2.1|lemma2.2|lemma2.4|lemma2.5|lemma2.6|lemma3.1|lemma3.2|theorem|turan|all")
        ->required();
    v_cmd->add_option("--n", ver.n, "n range LO..HI");
    v_cmd->add_option("--t", ver.t, "t range LO..HI");
    v_cmd->add_option("--r", ver.r, "r range LO..HI");
    v_cmd->add_option("--k", ver.k, "k range LO..HI");
    v_cmd->add_option("--spec", ver.spec, "flower half-lengths");
    v_cmd->add_option("--trials", ver.trials, "challenge trials");
    v_cmd->add_option("--seed", ver.seed, "challenge seed");
    v_cmd->add_option("--fixture", ver.fixture, "order-8 isomorph-free graph6 file for --check all");
    v_cmd->add_flag("--desk", ver.desk, "desk-scale defaults (also the default)");
    v_cmd->add_option("--in", ver.in_path, "graph6 stream for --check theorem");
    v_cmd->add_option("--out", ver.out, "write report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    json config{{"workers", workers}};
    try {
        if (*c_cmd) {
            return run_construct(cons);
        }
        if (*q_cmd) {
            return run_q(q_in, q_bounds, q_tol);
        }
        if (*f_cmd) {
            config.update({{"in", f_in}, {"spec", f_spec}, {"budget", f_budget}});
            return run_free_check(f_in, f_spec, f_witness, f_budget);
        }
        if (*s_cmd) {
            sea.workers = workers;
            config.update({{"command", "search"},
                           {"n", sea.n},
                           {"spec", sea.spec},
                           {"labeled", sea.labeled},
                           {"in", sea.in_path},
                           {"objective", sea.objective},
                           {"connected_only", sea.connected_only}});
            return run_search(sea, config);
        }
        if (*v_cmd) {
            ver.workers = workers;
            config.update({{"command", "verify"},
                           {"check", ver.check},
                           {"n", ver.n},
                           {"t", ver.t},
                           {"r", ver.r},
                           {"k", ver.k},
                           {"spec", ver.spec},
                           {"trials", ver.trials},
                           {"seed", ver.seed},
                           {"fixture", ver.fixture}});
            return run_verify(ver, config);
        }
    } catch (const qflower::BudgetExceededError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_budget;
    } catch (const qflower::ParseError& e) {
        std::fprintf(stderr, "parse error: %s (offset %zu)\n", e.what(), e.offset);
        return exit_io;
    } catch (const qflower::DomainError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const qflower::CapabilityError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return exit_usage;
    } catch (const qflower::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    }
    return exit_usage;
}
