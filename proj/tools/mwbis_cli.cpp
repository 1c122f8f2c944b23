// Command-line front end: solve one instance, generate instance families,
// verify the reduction equivalence, or benchmark methods over a corpus.
//
// Exit codes: 0 success, 1 user/input error, 2 verification mismatch,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "mwbis/generators.hpp"
#include "mwbis/graph_io.hpp"
#include "mwbis/lp.hpp"
#include "mwbis/rational.hpp"
#include "mwbis/reductions.hpp"
#include "mwbis/solvers.hpp"

using json = nlohmann::ordered_json;
using namespace mwbis;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResourceCap = 3;

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceCap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<int> to_one_based(const std::vector<int>& vs) {
    std::vector<int> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(v + 1);
    return out;
}

std::string odd_cycle_text(const std::vector<int>& cycle) {
    std::ostringstream os;
    os << "odd cycle (1-based):";
    for (int v : cycle) os << " " << v + 1;
    return os.str();
}

Bipartition require_bipartite(const Graph& g, const std::string& method) {
    auto res = find_bipartition(g);
    if (!res.bipartite())
        throw CLI::ValidationError("method " + method,
                                   "input graph is not bipartite; " +
                                       odd_cycle_text(res.odd_cycle));
    return *res.parts;
}

// Re-check a solution with the graph-core primitives before it leaves the
// process; a discrepancy is an internal error, not a user error.
void verify_or_die(const WeightedInstance& inst, const Solution& sol) {
    std::string complaint = check_solution(inst, sol);
    if (!complaint.empty())
        throw VerificationFailure("emitted solution failed re-verification: " + complaint);
}

json instance_digest(const WeightedInstance& inst, const std::string& input) {
    return json{{"input", input},
                {"n", inst.graph.n},
                {"m", inst.graph.m},
                {"k", inst.k},
                {"weight_mode", inst.is_mivc() ? "degree" : "explicit"}};
}

// ---------------------------------------------------------------- solve ---

struct SolveOptions {
    std::string input;
    int k = 0;
    std::string method;
    std::string order = "natural";
    long long node_limit = 0;
    long long time_limit_ms = 0;
    std::string dump_lp;
};

int run_solve(const SolveOptions& opt, const std::string& argv_echo) {
    GraphFile file = read_graph_file(opt.input);
    WeightedInstance inst = instance_from_file(file, opt.k);
    json record{{"command", "solve"}, {"argv", argv_echo}};
    record.update(instance_digest(inst, opt.input));
    record["method"] = opt.method;

    auto start = std::chrono::steady_clock::now();
    if (opt.method == "lp") {
        auto model = build_lp(inst);
        LpSolution lp = solve_lp(model);
        record["time_ms"] = elapsed_ms(start);
        if (lp.status != LpStatus::Optimal)
            throw VerificationFailure("LP did not reach an optimal basis");
        // Replay the fractional point against every row.
        for (const auto& row : model.rows) {
            double lhs = 0;
            for (const auto& [v, c] : row.coeffs) lhs += c * lp.values[v];
            if (lhs > row.rhs + 1e-9)
                throw VerificationFailure("LP solution violates a constraint by " +
                                          std::to_string(lhs - row.rhs));
        }
        for (double v : lp.values)
            if (v < -1e-12) throw VerificationFailure("LP solution has a negative value");
        record["value"] = lp.objective;
        record["vertices"] = json::array();
        record["proven_optimal"] = true;
        json nonzeros = json::array();
        for (int v = 0; v < model.num_vars; ++v)
            if (lp.values[v] > 1e-12) nonzeros.push_back({v + 1, lp.values[v]});
        record["lp"] = {{"status", "optimal"},
                        {"iterations", lp.iterations},
                        {"certified", lp.certified},
                        {"objective_exact", lp.objective_exact},
                        {"nonzeros", nonzeros}};
        if (!opt.dump_lp.empty()) {
            std::ofstream out(opt.dump_lp);
            if (!out) throw CLI::ValidationError("--dump-lp", "cannot open " + opt.dump_lp);
            write_lp_format(model, out);
        }
    } else {
        Solution sol;
        if (opt.method == "exact") {
            SearchConfig config;
            if (opt.node_limit > 0) config.node_limit = opt.node_limit;
            if (opt.time_limit_ms > 0)
                config.time_limit = std::chrono::milliseconds(opt.time_limit_ms);
            sol = exact_mwbis(inst, config);
        } else if (opt.method == "greedy") {
            sol = greedy_bipartite(inst, require_bipartite(inst.graph, "greedy"));
        } else if (opt.method == "color") {
            Coloring col;
            if (opt.order == "degeneracy") {
                col = degeneracy_coloring(inst.graph);
            } else {
                std::vector<int> natural(inst.graph.n);
                for (int v = 0; v < inst.graph.n; ++v) natural[v] = v;
                col = greedy_coloring(inst.graph, natural);
            }
            sol = color_class_approx(inst, col);
            record["num_colors"] = col.num_colors;
        } else {  // truncate
            require_bipartite(inst.graph, "truncate");
            // Weight-0 vertices (isolated vertices of MIVC files) never help;
            // the flow subroutine wants strictly positive weights, so run it
            // on the positive-weight induced subgraph.
            std::vector<int> keep, back(inst.graph.n, -1);
            for (int v = 0; v < inst.graph.n; ++v)
                if (inst.weights[v] > 0.0) {
                    back[v] = static_cast<int>(keep.size());
                    keep.push_back(v);
                }
            std::vector<std::pair<int, int>> sub_edges;
            for (const auto& [u, v] : inst.graph.edge_list())
                if (back[u] >= 0 && back[v] >= 0) sub_edges.emplace_back(back[u], back[v]);
            Graph sub = build_graph(static_cast<int>(keep.size()), sub_edges);
            std::vector<double> sub_w(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) sub_w[i] = inst.weights[keep[i]];
            auto sub_bip = find_bipartition(sub);
            auto sub_mwis = mwis_bipartite_exact(sub, sub_w, *sub_bip.parts);
            std::vector<int> mwis;
            for (int v : sub_mwis) mwis.push_back(keep[v]);
            sol = truncate_to_budget(mwis, inst.weights, inst.k);
        }
        record["time_ms"] = elapsed_ms(start);
        verify_or_die(inst, sol);
        record["value"] = sol.value;
        record["vertices"] = to_one_based(sol.vertices);
        record["proven_optimal"] = sol.proven_optimal;
    }
    std::cout << record.dump() << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- generate ---

struct GenerateOptions {
    std::string family;
    int k = 0, x = 0, n = 0, r = 0, na = 0, nb = 0;
    double edge_prob = 0.5;
    std::string weights = "degree";
    double lo = 0.5, hi = 10.0;
    std::uint64_t seed = 1;
    std::string output;
};

int run_generate(const GenerateOptions& opt) {
    Graph graph;
    const std::vector<double>* weights = nullptr;
    std::vector<double> weight_store;
    std::ostringstream provenance;
    provenance << "family " << opt.family;
    if (opt.family == "tight") {
        auto inst = gen_tight(opt.k, opt.x);
        graph = inst.graph;
        provenance << " k=" << opt.k << " x=" << opt.x;
    } else if (opt.family == "gap") {
        auto inst = gen_gap(opt.k);
        graph = inst.graph;
        provenance << " k=" << opt.k;
    } else if (opt.family == "regular") {
        graph = gen_random_regular(opt.n, opt.r, opt.seed);
        provenance << " n=" << opt.n << " r=" << opt.r << " seed=" << opt.seed;
    } else {  // bipartite
        auto mode = opt.weights == "uniform" ? WeightMode::Uniform : WeightMode::Degree;
        auto sample =
            gen_random_bipartite(opt.na, opt.nb, opt.edge_prob, opt.seed, mode, opt.lo, opt.hi);
        graph = sample.instance.graph;
        if (mode == WeightMode::Uniform) {
            weight_store = sample.instance.weights;
            weights = &weight_store;
        }
        provenance << " na=" << opt.na << " nb=" << opt.nb << " p=" << opt.edge_prob
                   << " seed=" << opt.seed << " weights=" << opt.weights;
    }
    write_graph_file(opt.output, graph, weights, {provenance.str()});
    std::cerr << "wrote " << opt.output << " (n=" << graph.n << ", m=" << graph.m << ")\n";
    return kExitOk;
}

// ------------------------------------------------------ verify-reduction ---

struct VerifyOptions {
    int n = 12, k = 3, trials = 20;
    std::uint64_t seed = 1;
};

int run_verify_reduction(const VerifyOptions& opt) {
    // Validate (n, k) up front so parameter errors are user errors, not
    // per-trial failures.
    coverage_target(opt.n, opt.k);
    SplitMix64 base(opt.seed);
    int mismatches = 0, skipped = 0;
    for (int trial = 0; trial < opt.trials; ++trial) {
        std::uint64_t trial_seed = base.next();
        json record{{"command", "verify-reduction"}, {"trial", trial}, {"seed", trial_seed}};
        Graph g;
        try {
            g = gen_random_regular(opt.n, opt.n - 4, trial_seed);
        } catch (const std::runtime_error& e) {
            ++skipped;
            record["skipped"] = true;
            record["reason"] = e.what();
            std::cout << record.dump() << "\n";
            continue;
        }
        EquivalenceReport rep = verify_equivalence(g, opt.k);
        record["n"] = rep.n;
        record["k"] = rep.k;
        record["r"] = rep.r;
        record["m"] = rep.m;
        record["x"] = rep.x;
        record["target"] = rep.target;
        record["clique_found"] = rep.clique_found;
        record["mivc_opt"] = rep.mivc_opt;
        record["equivalent"] = rep.equivalent;
        if (!rep.equivalent) ++mismatches;
        std::cout << record.dump() << "\n";
    }
    json summary{{"command", "verify-reduction"},
                 {"trials", opt.trials},
                 {"mismatches", mismatches},
                 {"skipped", skipped}};
    std::cout << summary.dump() << "\n";
    return mismatches == 0 ? kExitOk : kExitVerification;
}

// ----------------------------------------------------------------- bench ---

struct BenchOptions {
    std::string family;
    int count = 100;
    int max_side = 8;
    std::string weights = "mixed";
    std::vector<int> k_list;
    std::vector<int> x_list;
    std::string methods = "greedy";
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string output;
};

struct BenchRow {
    std::string instance, method;
    int n = 0;
    long long m = 0;
    int k = 0;
    double value = 0, exact = 0, ratio = 0, time_ms = 0;
    std::string ratio_exact;
    std::string error;  // per-instance failure; the run continues
};

struct BenchTask {
    std::string name;
    WeightedInstance instance;
    std::optional<Bipartition> bipartition;
};

BenchRow run_method(const BenchTask& task, const std::string& method, double exact_value,
                    long long exact_int, bool integer_instance) {
    const WeightedInstance& inst = task.instance;
    BenchRow row{task.name, method, inst.graph.n, inst.graph.m, inst.k, 0, exact_value, 0, 0, ""};
    auto start = std::chrono::steady_clock::now();
    if (method == "exact") {
        row.value = exact_value;
        row.ratio = 1.0;
        if (integer_instance) row.ratio_exact = "1";
    } else if (method == "greedy") {
        Bipartition bip = task.bipartition
                              ? *task.bipartition
                              : require_bipartite(inst.graph, "greedy");
        Solution sol = greedy_bipartite(inst, bip);
        verify_or_die(inst, sol);
        row.value = sol.value;
        row.ratio = exact_value > 0 ? sol.value / exact_value : 1.0;
        if (integer_instance && exact_int > 0)
            row.ratio_exact = Rational(set_weight_int(inst, sol.vertices), exact_int).str();
    } else if (method == "color") {
        std::vector<int> natural(inst.graph.n);
        for (int v = 0; v < inst.graph.n; ++v) natural[v] = v;
        Solution sol = color_class_approx(inst, greedy_coloring(inst.graph, natural));
        verify_or_die(inst, sol);
        row.value = sol.value;
        row.ratio = exact_value > 0 ? sol.value / exact_value : 1.0;
    } else if (method == "lp") {
        LpSolution lp = solve_lp(build_lp(inst));
        if (lp.status != LpStatus::Optimal)
            throw VerificationFailure("LP did not reach an optimal basis");
        row.value = lp.objective;
        // The gap column: integral optimum over fractional optimum.
        row.ratio = lp.objective > 0 ? exact_value / lp.objective : 1.0;
        if (integer_instance && lp.certified) {
            auto slash = lp.objective_exact.find('/');
            long long num = std::stoll(lp.objective_exact.substr(0, slash));
            long long den = slash == std::string::npos
                                ? 1
                                : std::stoll(lp.objective_exact.substr(slash + 1));
            if (num > 0) row.ratio_exact = (Rational(exact_int) * Rational(den, num)).str();
        }
    } else {
        throw CLI::ValidationError("--methods", "unknown method '" + method + "'");
    }
    row.time_ms = elapsed_ms(start);
    return row;
}

std::vector<BenchTask> build_corpus(const BenchOptions& opt) {
    std::vector<BenchTask> tasks;
    if (opt.family == "bipartite") {
        const double probs[] = {0.2, 0.5, 0.8};
        SplitMix64 rng(opt.seed);
        for (int i = 0; i < opt.count; ++i) {
            std::uint64_t inst_seed = rng.next();
            SplitMix64 dims(inst_seed);
            int na = 1 + static_cast<int>(dims.next_below(opt.max_side));
            int nb = 1 + static_cast<int>(dims.next_below(opt.max_side));
            double p = probs[i % 3];
            WeightMode mode = WeightMode::Degree;
            if (opt.weights == "uniform" || (opt.weights == "mixed" && i % 2 == 1))
                mode = WeightMode::Uniform;
            auto sample = gen_random_bipartite(na, nb, p, inst_seed, mode);
            for (int k = 1; k <= sample.instance.graph.n; ++k) {
                std::ostringstream name;
                name << "bipartite-" << std::setfill('0') << std::setw(3) << i << "-k" << k;
                tasks.push_back(
                    {name.str(), with_budget(sample.instance, k), sample.bipartition});
            }
        }
    } else if (opt.family == "tight") {
        for (int k : opt.k_list)
            for (int x : opt.x_list) {
                std::ostringstream name;
                name << "tight-k" << k << "-x" << x;
                tasks.push_back({name.str(), gen_tight(k, x), std::nullopt});
            }
    } else {  // gap
        for (int k : opt.k_list) {
            std::ostringstream name;
            name << "gap-k" << k;
            tasks.push_back({name.str(), gen_gap(k), std::nullopt});
        }
    }
    return tasks;
}

int run_bench(const BenchOptions& opt) {
    std::vector<BenchTask> tasks = build_corpus(opt);
    std::vector<std::string> methods;
    {
        std::istringstream ms(opt.methods);
        std::string item;
        while (std::getline(ms, item, ','))
            if (!item.empty()) methods.push_back(item);
    }
    if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");

    std::vector<std::vector<BenchRow>> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto sanitize = [](std::string s) {
        for (char& c : s)
            if (c == ',' || c == '\n') c = ';';
        return s;
    };
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            const BenchTask& task = tasks[i];
            Solution exact;
            try {
                exact = exact_mwbis(task.instance);
                if (!exact.proven_optimal)
                    throw VerificationFailure("exact baseline did not complete");
                verify_or_die(task.instance, exact);
            } catch (const std::exception& e) {
                BenchRow row{task.name, "exact", task.instance.graph.n, task.instance.graph.m,
                             task.instance.k, 0,   0,                   0,
                             0,         "",      sanitize(e.what())};
                rows[i].push_back(row);
                continue;
            }
            long long exact_int = task.instance.integer_weights
                                      ? set_weight_int(task.instance, exact.vertices)
                                      : 0;
            for (const auto& method : methods) {
                try {
                    rows[i].push_back(run_method(task, method, exact.value, exact_int,
                                                 task.instance.integer_weights));
                } catch (const std::exception& e) {
                    BenchRow row{task.name, method, task.instance.graph.n, task.instance.graph.m,
                                 task.instance.k, 0,  0,                   0,
                                 0,         "",       sanitize(e.what())};
                    rows[i].push_back(row);
                }
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::future<void>> pool;
    for (int j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) throw CLI::ValidationError("--output", "cannot open " + opt.output);
        out = &file;
    }
    *out << "row,instance,method,n,m,k,value,exact,ratio,ratio_exact,time_ms,error\n";
    std::map<std::string, std::pair<double, std::pair<double, long long>>> agg;  // min, (sum, count)
    for (const auto& group : rows)
        for (const auto& r : group) {
            if (!r.error.empty()) {
                *out << "instance," << r.instance << "," << r.method << "," << r.n << ","
                     << r.m << "," << r.k << ",,,,,," << r.error << "\n";
                continue;
            }
            *out << "instance," << r.instance << "," << r.method << "," << r.n << "," << r.m
                 << "," << r.k << "," << r.value << "," << r.exact << "," << r.ratio << ","
                 << r.ratio_exact << "," << r.time_ms << ",\n";
            auto& [mn, sc] = agg[r.method];
            if (sc.second == 0) mn = r.ratio;
            mn = std::min(mn, r.ratio);
            sc.first += r.ratio;
            ++sc.second;
        }
    for (const auto& [method, stat] : agg) {
        *out << "summary-min,," << method << ",,,,,," << stat.first << ",,,\n";
        *out << "summary-mean,," << method << ",,,,,,"
             << stat.second.first / static_cast<double>(stat.second.second) << ",,,\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MWBIS/MIVC solver toolkit for bipartite budgeted independent sets"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "solve one instance from a graph file");
    solve->add_option("-i,--input", solve_opt.input, "graph file")->required();
    solve->add_option("--k", solve_opt.k, "budget")->required()->check(CLI::NonNegativeNumber);
    solve->add_option("--method", solve_opt.method, "exact|greedy|color|lp|truncate")
        ->required()
        ->check(CLI::IsMember({"exact", "greedy", "color", "lp", "truncate"}));
    solve->add_option("--order", solve_opt.order, "coloring order for --method color")
        ->check(CLI::IsMember({"natural", "degeneracy"}));
    solve->add_option("--node-limit", solve_opt.node_limit, "exact search node cap");
    solve->add_option("--time-limit-ms", solve_opt.time_limit_ms, "exact search time cap");
    solve->add_option("--dump-lp", solve_opt.dump_lp, "write the LP model in LP format");

    GenerateOptions gen_opt;
    auto* gen = app.add_subcommand("generate", "write an instance family member to a file");
    gen->add_option("family", gen_opt.family, "tight|gap|regular|bipartite")
        ->required()
        ->check(CLI::IsMember({"tight", "gap", "regular", "bipartite"}));
    gen->add_option("--k", gen_opt.k, "family parameter k");
    gen->add_option("--x", gen_opt.x, "tight family parameter x");
    gen->add_option("--n", gen_opt.n, "regular family vertex count");
    gen->add_option("--r", gen_opt.r, "regular family degree");
    gen->add_option("--na", gen_opt.na, "bipartite side A size");
    gen->add_option("--nb", gen_opt.nb, "bipartite side B size");
    gen->add_option("--edge-prob", gen_opt.edge_prob, "bipartite edge probability");
    gen->add_option("--weights", gen_opt.weights, "bipartite weights: degree|uniform")
        ->check(CLI::IsMember({"degree", "uniform"}));
    gen->add_option("--lo", gen_opt.lo, "uniform weight lower bound");
    gen->add_option("--hi", gen_opt.hi, "uniform weight upper bound");
    gen->add_option("--seed", gen_opt.seed, "generator seed");
    gen->add_option("-o,--output", gen_opt.output, "output graph file")->required();

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify-reduction",
                                      "check clique/coverage equivalence on random sources");
    verify->add_option("--n", verify_opt.n, "source vertex count (> 11)");
    verify->add_option("--k", verify_opt.k, "clique size (< n/2)");
    verify->add_option("--trials", verify_opt.trials, "number of random sources");
    verify->add_option("--seed", verify_opt.seed, "base seed");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "benchmark methods over a corpus, CSV output");
    bench->add_option("--family", bench_opt.family, "bipartite|tight|gap")
        ->required()
        ->check(CLI::IsMember({"bipartite", "tight", "gap"}));
    bench->add_option("--count", bench_opt.count, "bipartite: number of instances");
    bench->add_option("--max-side", bench_opt.max_side, "bipartite: max side size");
    bench->add_option("--weights", bench_opt.weights, "bipartite: degree|uniform|mixed")
        ->check(CLI::IsMember({"degree", "uniform", "mixed"}));
    bench->add_option("--k-list", bench_opt.k_list, "tight/gap: budgets")->delimiter(',');
    bench->add_option("--x-list", bench_opt.x_list, "tight: x values")->delimiter(',');
    bench->add_option("--methods", bench_opt.methods, "comma list: greedy,color,lp,exact");
    bench->add_option("--seed", bench_opt.seed, "base seed");
    bench->add_option("--jobs", bench_opt.jobs, "parallel workers");
    bench->add_option("-o,--output", bench_opt.output, "CSV path (default stdout)");

    std::string argv_echo;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) argv_echo += " ";
        argv_echo += argv[i];
    }

    try {
        app.parse(argc, argv);
        if (*solve) return run_solve(solve_opt, argv_echo);
        if (*gen) return run_generate(gen_opt);
        if (*verify) return run_verify_reduction(verify_opt);
        return run_bench(bench_opt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUserError;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return kExitVerification;
    } catch (const CliqueCapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::runtime_error& e) {
        // Remaining runtime errors are resource caps: simplex iteration
        // limits and generator retry exhaustion.
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    }
}
