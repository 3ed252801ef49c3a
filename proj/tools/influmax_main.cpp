// influmax: influence-maximization toolkit CLI.
//
//   influmax gen       generate a synthetic power-law edge list
//   influmax assign    assign edge probabilities under a model
//   influmax select    pick a seed set with a chosen algorithm
//   influmax evaluate  Monte-Carlo spread of a seed file
//   influmax bench     sweep a grid of experiments into CSV
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 divergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

#include "influmax/baselines.hpp"
#include "influmax/cascade.hpp"
#include "influmax/generator.hpp"
#include "influmax/graph.hpp"
#include "influmax/graph_io.hpp"
#include "influmax/irie.hpp"
#include "influmax/kernels.hpp"
#include "influmax/rank.hpp"

namespace {

using influmax::Graph;
using influmax::NodeId;
using influmax::SeedSet;
using json = nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDivergence = 4;

std::uint64_t peak_rss_bytes() {
#if defined(__unix__) || defined(__APPLE__)
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
#if defined(__APPLE__)
    return static_cast<std::uint64_t>(usage.ru_maxrss);
#else
    return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;
#endif
#else
    return 0;
#endif
}

// ---------------------------------------------------------------------------
// experiment description (flags and/or JSON spec; flags win)

struct GenSource {
    NodeId n = 2000;
    double avg_degree = 10.0;
    double exponent = 2.5;
    std::uint64_t seed = 1;
};

struct ExperimentSpec {
    std::string graph_file;
    std::optional<GenSource> generate;
    bool undirected = false;
    std::string model = "file";
    std::string algo = "irie";
    std::uint32_t k = 50;
    double alpha = 0.7;
    double theta = 0.0;  // 0 = model default (1/320 IC, 1/160 IC-N)
    std::string cascade = "ic";
    double q = 0.9;
    double lambda = 0.0;
    std::uint32_t runs = 10000;
    std::uint64_t seed = 1;
    std::string out;

    double effective_theta() const {
        if (theta > 0.0) return theta;
        return cascade == "icn" ? influmax::kDefaultThetaIcn : influmax::kDefaultThetaIc;
    }
    std::string graph_label() const {
        if (generate) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "plaw(n=%u avg=%g exp=%g seed=%llu)", generate->n,
                          generate->avg_degree, generate->exponent,
                          static_cast<unsigned long long>(generate->seed));
            return buf;
        }
        return graph_file;
    }
};

GenSource gen_from_json(const json& j) {
    GenSource g;
    g.n = j.at("n").get<NodeId>();
    g.avg_degree = j.value("avg_degree", 10.0);
    g.exponent = j.value("exponent", 2.5);
    g.seed = j.value("seed", std::uint64_t{1});
    return g;
}

void apply_spec_json(ExperimentSpec& spec, const json& j) {
    if (j.contains("graph")) spec.graph_file = j.at("graph").get<std::string>();
    if (j.contains("generate")) spec.generate = gen_from_json(j.at("generate"));
    spec.undirected = j.value("undirected", spec.undirected);
    spec.model = j.value("model", spec.model);
    spec.algo = j.value("algo", spec.algo);
    spec.k = j.value("k", spec.k);
    spec.alpha = j.value("alpha", spec.alpha);
    spec.theta = j.value("theta", spec.theta);
    spec.cascade = j.value("cascade", spec.cascade);
    spec.q = j.value("q", spec.q);
    spec.lambda = j.value("lambda", spec.lambda);
    spec.runs = j.value("runs", spec.runs);
    spec.seed = j.value("seed", spec.seed);
    spec.out = j.value("out", spec.out);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw influmax::ParseError("cannot open spec '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw influmax::ParseError("spec '" + path + "': " + e.what());
    }
    return j;
}

Graph load_graph(const ExperimentSpec& spec) {
    Graph g;
    if (spec.generate) {
        g = influmax::generate_power_law(spec.generate->n, spec.generate->avg_degree,
                                         spec.generate->exponent, spec.generate->seed);
    } else if (!spec.graph_file.empty()) {
        g = influmax::build_graph(influmax::load_snap_edgelist(spec.graph_file),
                                  !spec.undirected);
    } else {
        throw influmax::ValidationError("no graph given (need --graph or a generate spec)");
    }
    const auto model = influmax::ProbabilityModel::parse(spec.model, spec.seed);
    if (model.kind == influmax::ProbabilityModel::Kind::FromFile && !g.has_probabilities()) {
        throw influmax::ValidationError(
            "graph file carries no probabilities; pick a model (--model wc|tr|...)");
    }
    return assign_probabilities(g, model);
}

// ---------------------------------------------------------------------------
// selection + result records

struct SelectionResult {
    SeedSet seeds;
    double select_ms = 0.0;
    std::uint64_t rss_bytes = 0;
};

SelectionResult run_selection(const Graph& g, const ExperimentSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    SeedSet seeds;
    if (spec.algo == "degree") {
        seeds = influmax::select_degree(g, spec.k);
    } else if (spec.algo == "pagerank") {
        seeds = influmax::select_pagerank(g, spec.k);
    } else if (spec.algo == "ir") {
        influmax::DampedSystem sys;
        sys.alpha = spec.alpha;
        seeds = influmax::select_top_k_ir(g, spec.k, sys);
    } else if (spec.algo == "irie") {
        influmax::IrieParams params;
        params.alpha = spec.alpha;
        params.theta = spec.effective_theta();
        seeds = influmax::irie_select(g, spec.k, params);
    } else if (spec.algo == "irie-n") {
        influmax::IrieNParams params;
        params.alpha = spec.alpha;
        params.theta = spec.theta > 0.0 ? spec.theta : influmax::kDefaultThetaIcn;
        params.q = spec.q;
        params.lambda = spec.lambda;
        seeds = influmax::irie_n_select(g, spec.k, params);
    } else if (spec.algo == "celf") {
        const auto objective = spec.cascade == "icn"
                                   ? influmax::CelfObjective::icn_net(spec.q, spec.lambda)
                                   : influmax::CelfObjective::ic();
        seeds = influmax::greedy_celf(g, spec.k, objective,
                                      influmax::CelfEvaluator::monte_carlo(spec.runs, spec.seed));
    } else {
        throw influmax::ValidationError("unknown algorithm '" + spec.algo + "'");
    }
    const auto t1 = std::chrono::steady_clock::now();
    SelectionResult out;
    out.seeds = std::move(seeds);
    out.select_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.rss_bytes = peak_rss_bytes();
    return out;
}

struct ResultRecord {
    std::string algorithm, graph, model, cascade;
    NodeId n = 0;
    std::uint64_t m = 0;
    std::uint32_t k = 0;
    double alpha = 0, theta = 0, q = 0, lambda = 0;
    std::uint32_t runs = 0;
    std::uint64_t seed = 0;
    std::optional<influmax::SpreadEstimate> spread;
    double select_ms = 0.0;
    std::uint64_t rss_bytes = 0;
    std::string status = "ok";
    std::vector<NodeId> seeds;
};

constexpr const char* kCsvHeader =
    "schema,algorithm,graph,model,cascade,n,m,k,alpha,theta,q,lambda,runs,seed,"
    "spread_mean,spread_stderr,positive_mean,negative_mean,select_ms,peak_rss_bytes,"
    "status,seeds";

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_record(const ResultRecord& r) {
    char num[64];
    std::string row = "1,";
    row += csv_quote(r.algorithm) + ',' + csv_quote(r.graph) + ',' + csv_quote(r.model) + ',' +
           r.cascade + ',';
    row += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.k) + ',';
    std::snprintf(num, sizeof num, "%g,%g,%g,%g,", r.alpha, r.theta, r.q, r.lambda);
    row += num;
    row += std::to_string(r.runs) + ',' + std::to_string(r.seed) + ',';
    if (r.spread) {
        std::snprintf(num, sizeof num, "%.17g,%.17g,", r.spread->mean, r.spread->std_error);
        row += num;
        if (r.cascade == "icn") {
            std::snprintf(num, sizeof num, "%.17g,%.17g,", r.spread->mean_positive,
                          r.spread->mean_negative);
            row += num;
        } else {
            row += ",,";
        }
    } else {
        row += ",,,,";
    }
    std::snprintf(num, sizeof num, "%.3f,", r.select_ms);
    row += num;
    row += std::to_string(r.rss_bytes) + ',' + csv_quote(r.status) + ',';
    std::string seeds;
    for (std::size_t i = 0; i < r.seeds.size(); ++i) {
        if (i) seeds += ' ';
        seeds += std::to_string(r.seeds[i]);
    }
    row += csv_quote(seeds);
    return row;
}

void append_csv(const std::string& path, const std::vector<std::string>& rows) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw influmax::ParseError("cannot open '" + path + "' for writing");
    if (fresh) out << kCsvHeader << '\n';
    for (const std::string& row : rows) out << row << '\n';
}

void write_seeds(const std::string& path, const SeedSet& seeds) {
    std::ofstream out(path);
    if (!out) throw influmax::ParseError("cannot open '" + path + "' for writing");
    for (NodeId s : seeds.nodes) out << s << '\n';
}

std::vector<NodeId> read_seeds(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw influmax::ParseError("cannot open seeds file '" + path + "'");
    std::vector<NodeId> seeds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        try {
            const unsigned long v = std::stoul(line);
            if (v >= g.node_count()) {
                throw influmax::ValidationError("seeds file line " + std::to_string(line_no) +
                                                ": id " + line + " out of range");
            }
            seeds.push_back(static_cast<NodeId>(v));
        } catch (const std::invalid_argument&) {
            throw influmax::ParseError("seeds file line " + std::to_string(line_no) +
                                       ": expected node id, got '" + line + "'");
        }
    }
    if (seeds.empty()) throw influmax::ValidationError("seeds file '" + path + "' is empty");
    return seeds;
}

influmax::DiffusionModel cascade_model(const ExperimentSpec& spec) {
    if (spec.cascade == "icn") return influmax::DiffusionModel::icn(spec.q);
    if (spec.cascade == "ic") return influmax::DiffusionModel::ic();
    throw influmax::ValidationError("unknown cascade '" + spec.cascade + "' (ic|icn)");
}

ResultRecord base_record(const ExperimentSpec& spec, const Graph& g) {
    ResultRecord r;
    r.algorithm = spec.algo;
    r.graph = spec.graph_label();
    r.model = spec.model;
    r.cascade = spec.cascade;
    r.n = g.node_count();
    r.m = g.edge_count();
    r.k = spec.k;
    r.alpha = spec.alpha;
    r.theta = spec.effective_theta();
    r.q = spec.q;
    r.lambda = spec.lambda;
    r.runs = spec.runs;
    r.seed = spec.seed;
    return r;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_select(const ExperimentSpec& spec, const std::string& results_path) {
    const Graph g = load_graph(spec);
    if (spec.k < 1 || spec.k > g.node_count()) {
        std::cerr << "error: k=" << spec.k << " out of range [1," << g.node_count() << "]\n";
        return kExitUsage;
    }
    const SelectionResult sel = run_selection(g, spec);
    if (!spec.out.empty()) write_seeds(spec.out, sel.seeds);

    ResultRecord rec = base_record(spec, g);
    rec.select_ms = sel.select_ms;
    rec.rss_bytes = sel.rss_bytes;
    rec.seeds = sel.seeds.nodes;
    if (!results_path.empty()) append_csv(results_path, {format_record(rec)});

    std::printf("selected %u seeds with %s on %s (n=%u, m=%llu) in %.1f ms\n", spec.k,
                spec.algo.c_str(), rec.graph.c_str(), rec.n,
                static_cast<unsigned long long>(rec.m), sel.select_ms);
    for (std::size_t i = 0; i < std::min<std::size_t>(sel.seeds.nodes.size(), 10); ++i) {
        std::printf("  %u (score %.6g)\n", sel.seeds.nodes[i], sel.seeds.scores[i]);
    }
    if (sel.seeds.nodes.size() > 10) std::printf("  ...\n");
    return 0;
}

int cmd_evaluate(const ExperimentSpec& spec, const std::string& seeds_path) {
    const Graph g = load_graph(spec);
    const std::vector<NodeId> seeds = read_seeds(seeds_path, g);
    const auto est = influmax::estimate_spread(g, seeds, cascade_model(spec), spec.runs,
                                               spec.seed);
    ResultRecord rec = base_record(spec, g);
    rec.algorithm = "seeds:" + seeds_path;  // provenance of the evaluated set
    rec.k = static_cast<std::uint32_t>(seeds.size());
    rec.spread = est;
    rec.seeds = seeds;
    rec.rss_bytes = peak_rss_bytes();
    if (!spec.out.empty()) append_csv(spec.out, {format_record(rec)});
    std::printf("spread %.4f +- %.4f over %u runs (%s)\n", est.mean, est.std_error, est.runs,
                spec.cascade.c_str());
    if (spec.cascade == "icn") {
        std::printf("  positive %.4f  negative %.4f\n", est.mean_positive, est.mean_negative);
    }
    return 0;
}

std::string long_csv_path(const std::string& out) {
    std::filesystem::path p(out);
    std::filesystem::path stem = p.parent_path() / p.stem();
    return stem.string() + ".long.csv";
}

int cmd_bench(const json& sweep, const std::string& out) {
    std::vector<json> graphs;
    if (sweep.contains("graphs")) {
        for (const auto& g : sweep.at("graphs")) graphs.push_back(g);
    }
    std::vector<std::string> models =
        sweep.value("models", std::vector<std::string>{"file"});
    std::vector<std::string> algos = sweep.value("algos", std::vector<std::string>{"irie"});
    std::vector<std::uint32_t> ks = sweep.value("ks", std::vector<std::uint32_t>{50});

    ExperimentSpec base;
    apply_spec_json(base, sweep);

    std::vector<std::string> rows, long_rows;
    std::uint64_t cell = 0;
    for (const json& graph_src : graphs) {
        for (const std::string& model : models) {
            for (const std::string& algo : algos) {
                for (std::uint32_t k : ks) {
                    ExperimentSpec spec = base;
                    if (graph_src.is_string()) {
                        spec.graph_file = graph_src.get<std::string>();
                        spec.generate.reset();
                    } else if (graph_src.contains("generate")) {
                        spec.generate = gen_from_json(graph_src.at("generate"));
                        spec.graph_file.clear();
                    } else if (graph_src.contains("graph")) {
                        spec.graph_file = graph_src.at("graph").get<std::string>();
                        spec.generate.reset();
                    }
                    spec.model = model;
                    spec.algo = algo;
                    spec.k = k;
                    spec.seed = influmax::detail::mix64(base.seed ^ (0x8000000000000000ULL | cell));
                    ++cell;

                    ResultRecord rec;
                    try {
                        const Graph g = load_graph(spec);
                        rec = base_record(spec, g);
                        const SelectionResult sel = run_selection(g, spec);
                        rec.select_ms = sel.select_ms;
                        rec.rss_bytes = sel.rss_bytes;
                        rec.seeds = sel.seeds.nodes;
                        if (spec.runs > 0) {
                            rec.spread = influmax::estimate_spread(
                                g, sel.seeds.nodes, cascade_model(spec), spec.runs, spec.seed);
                        }
                    } catch (const std::exception& e) {
                        rec.algorithm = spec.algo;
                        rec.graph = spec.graph_label();
                        rec.model = spec.model;
                        rec.cascade = spec.cascade;
                        rec.k = spec.k;
                        rec.status = std::string("error: ") + e.what();
                    }
                    rows.push_back(format_record(rec));

                    const std::string key = csv_quote(rec.graph) + ',' + csv_quote(rec.model) +
                                            ',' + csv_quote(rec.algorithm) + ',' +
                                            std::to_string(rec.k) + ',';
                    char buf[64];
                    if (rec.spread) {
                        std::snprintf(buf, sizeof buf, "%.17g", rec.spread->mean);
                        long_rows.push_back(key + "spread_mean," + buf);
                        std::snprintf(buf, sizeof buf, "%.17g", rec.spread->std_error);
                        long_rows.push_back(key + "spread_stderr," + buf);
                        if (rec.cascade == "icn") {
                            std::snprintf(buf, sizeof buf, "%.17g", rec.spread->mean_positive);
                            long_rows.push_back(key + "positive_mean," + buf);
                            std::snprintf(buf, sizeof buf, "%.17g", rec.spread->mean_negative);
                            long_rows.push_back(key + "negative_mean," + buf);
                        }
                    }
                    std::snprintf(buf, sizeof buf, "%.3f", rec.select_ms);
                    long_rows.push_back(key + "select_ms," + buf);
                    long_rows.push_back(key + "peak_rss_bytes," + std::to_string(rec.rss_bytes));
                    std::printf("[%llu] %s %s %s k=%u %s\n",
                                static_cast<unsigned long long>(cell), rec.graph.c_str(),
                                rec.model.c_str(), rec.algorithm.c_str(), rec.k,
                                rec.status.c_str());
                }
            }
        }
    }

    {  // header always written, even for an empty grid
        std::ofstream reset(out, std::ios::trunc);
        reset << kCsvHeader << '\n';
        for (const std::string& row : rows) reset << row << '\n';
    }
    {
        std::ofstream lout(long_csv_path(out), std::ios::trunc);
        lout << "graph,model,algorithm,k,metric,value\n";
        for (const std::string& row : long_rows) lout << row << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"influence maximization toolkit"};
    app.require_subcommand(1);

    std::string backend = "auto";
    app.add_option("--backend", backend, "sweep kernels: auto|scalar|avx2")
        ->capture_default_str();

    // --- gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a power-law edge list");
    GenSource gen_src;
    std::string gen_out;
    gen->add_option("--n", gen_src.n, "node count")->required();
    gen->add_option("--avg-degree", gen_src.avg_degree, "average out-degree")
        ->capture_default_str();
    gen->add_option("--exponent", gen_src.exponent, "power-law exponent")->capture_default_str();
    gen->add_option("--seed", gen_src.seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "output edge-list file")->required();

    // --- shared experiment options ------------------------------------------
    ExperimentSpec spec;
    std::string spec_path, results_path, seeds_path;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", spec.graph_file, "edge-list file");
        cmd->add_flag("--undirected", spec.undirected, "treat input edges as undirected");
        cmd->add_option("--model", spec.model,
                        "probability model: wc|tr|bivalency:<i>|uniform:<p>|file");
        cmd->add_option("--seed", spec.seed, "rng seed");
    };

    auto* assign = app.add_subcommand("assign", "assign probabilities and write 'u v p'");
    add_graph_opts(assign);
    assign->add_option("--out", spec.out, "output file")->required();

    auto* select = app.add_subcommand("select", "select a seed set");
    add_graph_opts(select);
    select->add_option("--algo", spec.algo, "degree|pagerank|ir|irie|irie-n|celf")
        ->capture_default_str();
    select->add_option("--k", spec.k, "seed count")->capture_default_str();
    select->add_option("--alpha", spec.alpha, "damping factor")->capture_default_str();
    select->add_option("--theta", spec.theta, "tree threshold (0 = default)");
    select->add_option("--cascade", spec.cascade, "ic|icn")->capture_default_str();
    select->add_option("--q", spec.q, "quality factor (icn)")->capture_default_str();
    select->add_option("--lambda", spec.lambda, "negative-spread weight")->capture_default_str();
    select->add_option("--runs", spec.runs, "evaluator runs (celf)")->capture_default_str();
    select->add_option("--out", spec.out, "seeds output file");
    select->add_option("--results", results_path, "append a result row to this CSV");
    select->add_option("--spec", spec_path, "JSON experiment spec (flags override)");

    auto* evaluate = app.add_subcommand("evaluate", "estimate spread of a seed file");
    add_graph_opts(evaluate);
    evaluate->add_option("--seeds", seeds_path, "seed file (one id per line)")->required();
    evaluate->add_option("--cascade", spec.cascade, "ic|icn")->capture_default_str();
    evaluate->add_option("--q", spec.q, "quality factor (icn)")->capture_default_str();
    evaluate->add_option("--runs", spec.runs, "simulation runs")->capture_default_str();
    evaluate->add_option("--out", spec.out, "append a result row to this CSV");

    auto* bench = app.add_subcommand("bench", "run a sweep grid from a JSON spec");
    bench->add_option("--spec", spec_path, "JSON sweep spec")->required();
    bench->add_option("--out", spec.out, "results CSV (a .long.csv companion is also written)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (backend == "scalar") {
            influmax::kernels::set_backend(influmax::kernels::Backend::Scalar);
        } else if (backend == "avx2") {
            influmax::kernels::set_backend(influmax::kernels::Backend::Avx2);
        } else if (backend != "auto") {
            std::cerr << "error: unknown backend '" << backend << "'\n";
            return kExitUsage;
        }

        if (*gen) {
            const Graph g = influmax::generate_power_law(gen_src.n, gen_src.avg_degree,
                                                         gen_src.exponent, gen_src.seed);
            influmax::write_edgelist(g, gen_out, /*with_probs=*/false);
            std::printf("wrote %s: n=%u m=%llu\n", gen_out.c_str(), g.node_count(),
                        static_cast<unsigned long long>(g.edge_count()));
            return 0;
        }
        if (*assign) {
            if (spec.model == "file") {
                std::cerr << "error: assign needs --model wc|tr|bivalency:<i>|uniform:<p>\n";
                return kExitUsage;
            }
            const Graph g = load_graph(spec);
            influmax::write_edgelist(g, spec.out, /*with_probs=*/true);
            std::printf("wrote %s: n=%u m=%llu model=%s\n", spec.out.c_str(), g.node_count(),
                        static_cast<unsigned long long>(g.edge_count()), spec.model.c_str());
            return 0;
        }
        if (*select) {
            if (!spec_path.empty()) {
                ExperimentSpec from_file;
                apply_spec_json(from_file, load_json(spec_path));
                // flags the user actually passed override the file
                ExperimentSpec merged = from_file;
                auto passed = [&](const std::string& name) {
                    return select->count(name) > 0;
                };
                if (passed("--graph")) merged.graph_file = spec.graph_file;
                if (passed("--undirected")) merged.undirected = spec.undirected;
                if (passed("--model")) merged.model = spec.model;
                if (passed("--algo")) merged.algo = spec.algo;
                if (passed("--k")) merged.k = spec.k;
                if (passed("--alpha")) merged.alpha = spec.alpha;
                if (passed("--theta")) merged.theta = spec.theta;
                if (passed("--cascade")) merged.cascade = spec.cascade;
                if (passed("--q")) merged.q = spec.q;
                if (passed("--lambda")) merged.lambda = spec.lambda;
                if (passed("--runs")) merged.runs = spec.runs;
                if (passed("--seed")) merged.seed = spec.seed;
                if (passed("--out")) merged.out = spec.out;
                spec = merged;
            }
            if (spec.k < 1) {
                std::cerr << "error: --k must be >= 1\n";
                return kExitUsage;
            }
            static const std::vector<std::string> algos{"degree", "pagerank", "ir",
                                                        "irie",   "irie-n",   "celf"};
            if (std::find(algos.begin(), algos.end(), spec.algo) == algos.end()) {
                std::cerr << "error: unknown algorithm '" << spec.algo << "'\n";
                return kExitUsage;
            }
            return cmd_select(spec, results_path);
        }
        if (*evaluate) return cmd_evaluate(spec, seeds_path);
        if (*bench) return cmd_bench(load_json(spec_path), spec.out);
    } catch (const influmax::DivergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDivergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
