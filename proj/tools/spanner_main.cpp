// spanner_main.cpp - CLI tying generation, construction, verification and
// benchmarking into reproducible experiments.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "addspan/bench.hpp"
#include "addspan/graph.hpp"
#include "addspan/spanner.hpp"
#include "addspan/verify.hpp"

namespace {

using namespace addspan;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

WeightRange parse_weight_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("--weights expects lo:hi, got '" + text + "'");
    WeightRange range;
    range.lo = std::stod(text.substr(0, colon));
    range.hi = std::stod(text.substr(colon + 1));
    if (!(range.lo > 0.0) || range.hi < range.lo)
        throw std::runtime_error("--weights requires 0 < lo <= hi");
    return range;
}

int apsp_cap_from_env() {
    if (const char* cap = std::getenv("SPANNER_APSP_CAP")) return std::stoi(cap);
    return 5000;
}

int params_g_for_mu(int mu, int n) {
    const long long mu3 = static_cast<long long>(mu) * mu * mu;
    const long long g = (mu3 + n - 1) / n + 2;
    if (g > 1'000'000'000) throw std::runtime_error("--mu too large for this graph");
    return static_cast<int>(g);
}

Params params_for(const Graph& g, std::optional<int> mu_override, double epsilon,
                  std::uint64_t seed) {
    Params p = default_params(std::max(1, g.node_count()));
    if (mu_override) {
        p.mu = *mu_override;
        p.g = params_g_for_mu(p.mu, std::max(1, g.node_count()));
    }
    p.epsilon = epsilon;
    p.seed = seed;
    return p;
}

struct BuildOutcome {
    SpannerBuild build;
    double build_ms = 0.0;
};

BuildOutcome run_build(const Graph& g, const std::string& algo, const Params& params) {
    if (algo != "weighted" && g.weighted())
        throw std::runtime_error("algorithm '" + algo + "' requires an unweighted graph");
    BuildOutcome out;
    const auto start = std::chrono::steady_clock::now();
    if (algo == "fast") {
        out.build = fast_plus4(g, params);
    } else if (algo == "baseline") {
        out.build = chechik_baseline(g, params, apsp_cap_from_env());
    } else if (algo == "weighted") {
        out.build = weighted_plus4(g, params);
    } else {
        throw std::runtime_error("unknown algorithm '" + algo + "'");
    }
    const auto stop = std::chrono::steady_clock::now();
    out.build_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return out;
}

StretchReport run_verify(const Graph& g, const EdgeBitset& h, const std::string& algo,
                         double epsilon, std::optional<long long> pair_sample,
                         std::uint64_t seed) {
    VerifyOptions opts;
    opts.apsp_cap = apsp_cap_from_env();
    opts.pair_sample = pair_sample;
    opts.seed = seed;
    if (algo == "weighted") return verify_weighted_stretch(g, h, epsilon, opts);
    return verify_additive_stretch(g, h, 4, opts);
}

// ---------------------------------------------------------------- commands

struct GenerateArgs {
    int n = 0;
    long long m = 0;
    std::uint64_t seed = 0;
    std::string weights;
    std::string output;
};

int cmd_generate(const GenerateArgs& args) {
    Graph g = args.weights.empty()
                  ? random_graph(args.n, args.m, args.seed)
                  : random_graph(args.n, args.m, args.seed, parse_weight_range(args.weights));
    write_file(args.output, serialize_edge_list(g));
    std::cout << "n=" << args.n << " m=" << args.m << " seed=" << args.seed << "\n";
    return 0;
}

struct BuildArgs {
    std::string algo = "fast";
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    std::optional<int> mu_override;
    bool verify = false;
    std::optional<long long> pair_sample;
};

int cmd_build(const BuildArgs& args) {
    if (args.algo == "weighted" && args.epsilon == 0.0)
        throw std::runtime_error("--algo weighted requires --epsilon");
    if (args.algo != "weighted" && args.epsilon != 0.0)
        throw std::runtime_error("--epsilon is only valid with --algo weighted");

    const Graph g = parse_edge_list(read_file(args.input));
    const Params params = params_for(g, args.mu_override, args.epsilon, args.seed);
    const BuildOutcome outcome = run_build(g, args.algo, params);

    // Spanner edge list, inheriting the input weights.
    std::vector<Edge> kept;
    kept.reserve(outcome.build.spanner_edges.count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (outcome.build.spanner_edges.test(e)) kept.push_back(g.edge(e));
    }
    write_file(args.output, serialize_edge_list(build_graph(g.node_count(), kept, g.weighted())));
    write_file(args.output + ".json", build_stats_json(outcome.build, g));

    if (args.verify) {
        const StretchReport report = run_verify(g, outcome.build.spanner_edges, args.algo,
                                                args.epsilon, args.pair_sample, args.seed);
        std::cout << report.to_json();
        if (report.violations > 0) return 1;
    }
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string spanner;
    int k = 4;
    double epsilon = 0.0;
    std::optional<long long> pair_sample;
    std::uint64_t seed = 0;
    bool canonical_w = false;
};

int cmd_verify(const VerifyArgs& args) {
    const Graph g = parse_edge_list(read_file(args.graph));
    const Graph hg = parse_edge_list(read_file(args.spanner));
    if (hg.node_count() != g.node_count())
        throw std::runtime_error("spanner node count differs from graph");
    EdgeBitset h(g.edge_count());
    for (const Edge& e : hg.edges()) {
        const auto id = g.find_edge(e.u, e.v);
        if (!id)
            throw std::runtime_error("spanner edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ") is not an edge of the graph");
        h.insert(*id);
    }

    VerifyOptions opts;
    opts.apsp_cap = apsp_cap_from_env();
    opts.pair_sample = args.pair_sample;
    opts.seed = args.seed;
    opts.canonical_w = args.canonical_w;
    const StretchReport report = args.epsilon != 0.0
                                     ? verify_weighted_stretch(g, h, args.epsilon, opts)
                                     : verify_additive_stretch(g, h, args.k, opts);
    std::cout << report.to_json();
    return report.violations > 0 ? 1 : 0;
}

struct BenchArgs {
    std::string algo = "fast";
    std::vector<int> n_list;
    std::vector<long long> m_list;          // optional; otherwise the density rule
    double m_scale = 10.0;                  // m = min(m_scale * n^m_exp, n(n-1)/2)
    double m_exp = 1.4;
    int seeds = 1;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    std::optional<int> mu_override;
    std::string weights;
    bool verify = false;
    std::optional<long long> pair_sample;
    std::string csv;
};

int cmd_bench(const BenchArgs& args) {
    if (args.algo == "weighted" && args.epsilon == 0.0)
        throw std::runtime_error("--algo weighted requires --epsilon");
    if (args.algo != "weighted" && args.epsilon != 0.0)
        throw std::runtime_error("--epsilon is only valid with --algo weighted");
    if (!args.m_list.empty() && args.m_list.size() != args.n_list.size())
        throw std::runtime_error("--m list must match --n list");

    std::string csv = std::string(kBenchCsvHeader) + "\n";
    for (std::size_t i = 0; i < args.n_list.size(); ++i) {
        const int n = args.n_list[i];
        const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
        long long m;
        if (!args.m_list.empty()) {
            m = args.m_list[i];
        } else {
            const double dense = args.m_scale * std::pow(static_cast<double>(n), args.m_exp);
            m = std::min(static_cast<long long>(dense), max_pairs);
        }
        for (int s = 0; s < args.seeds; ++s) {
            const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(s);
            const Graph g = args.weights.empty()
                                ? random_graph(n, m, seed)
                                : random_graph(n, m, seed, parse_weight_range(args.weights));
            const Params params = params_for(g, args.mu_override, args.epsilon, seed);
            const BuildOutcome outcome = run_build(g, args.algo, params);

            BenchRow row;
            row.n = n;
            row.m = m;
            row.mu = params.mu;
            row.g = params.g;
            row.seed = seed;
            row.algo = args.algo;
            row.build_ms = outcome.build_ms;
            row.spanner_edges = outcome.build.spanner_edges.count();
            row.ratio_n_mu = size_report(outcome.build, g).ratio_to_n_mu;
            if (args.verify) {
                row.violations = run_verify(g, outcome.build.spanner_edges, args.algo,
                                            args.epsilon, args.pair_sample, seed)
                                     .violations;
            }
            csv += bench_csv_row(row);
            csv += '\n';
        }
    }
    if (args.csv.empty())
        std::cout << csv;
    else
        write_file(args.csv, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive spanner toolkit"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "write a random edge-list file");
    generate->add_option("--n", gen.n, "node count")->required();
    generate->add_option("--m", gen.m, "edge count")->required();
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--weights", gen.weights, "weight range lo:hi (weighted output)");
    generate->add_option("-o,--output", gen.output, "output path")->required();

    BuildArgs build;
    long long build_pair_sample = -1;
    int build_mu = -1;
    CLI::App* build_cmd = app.add_subcommand("build", "construct a spanner");
    build_cmd->add_option("--algo", build.algo, "baseline|fast|weighted")
        ->check(CLI::IsMember({"baseline", "fast", "weighted"}));
    build_cmd->add_option("-i,--input", build.input, "input edge list")->required();
    build_cmd->add_option("-o,--output", build.output, "output edge list")->required();
    build_cmd->add_option("--seed", build.seed, "RNG seed");
    build_cmd->add_option("--epsilon", build.epsilon, "error parameter (weighted only)");
    build_cmd->add_option("--mu", build_mu, "override the heaviness threshold");
    build_cmd->add_flag("--verify", build.verify, "run the matching stretch check");
    build_cmd->add_option("--pair-sample", build_pair_sample,
                          "verify on sampled pairs instead of all pairs");

    VerifyArgs ver;
    long long verify_pair_sample = -1;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a spanner file against its graph");
    verify_cmd->add_option("-g,--graph", ver.graph, "graph edge list")->required();
    verify_cmd->add_option("-i,--spanner", ver.spanner, "spanner edge list")->required();
    verify_cmd->add_option("--k", ver.k, "additive bound (unweighted)");
    verify_cmd->add_option("--epsilon", ver.epsilon, "weighted bound 4W(s,t)+epsW");
    verify_cmd->add_option("--pair-sample", verify_pair_sample, "sampled-pairs mode");
    verify_cmd->add_option("--seed", ver.seed, "seed for sampled pairs");
    verify_cmd->add_flag("--canonical-w", ver.canonical_w,
                         "W(s,t) from the canonical path instead of the strict minimax");

    BenchArgs bench;
    long long bench_pair_sample = -1;
    CLI::App* bench_cmd = app.add_subcommand("bench", "sweep sizes and seeds, emit CSV");
    bench_cmd->add_option("--algo", bench.algo, "baseline|fast|weighted")
        ->check(CLI::IsMember({"baseline", "fast", "weighted"}));
    bench_cmd->add_option("--n", bench.n_list, "node counts")->required()->delimiter(',');
    bench_cmd->add_option("--m", bench.m_list, "edge counts (else density rule)")->delimiter(',');
    bench_cmd->add_option("--m-scale", bench.m_scale, "density rule scale");
    bench_cmd->add_option("--m-exp", bench.m_exp, "density rule exponent");
    bench_cmd->add_option("--seeds", bench.seeds, "seeds per point");
    bench_cmd->add_option("--seed", bench.seed, "base seed");
    bench_cmd->add_option("--epsilon", bench.epsilon, "error parameter (weighted only)");
    int bench_mu = -1;
    bench_cmd->add_option("--mu", bench_mu, "override the heaviness threshold");
    bench_cmd->add_option("--weights", bench.weights, "weight range lo:hi");
    bench_cmd->add_flag("--verify", bench.verify, "record violations per row");
    bench_cmd->add_option("--pair-sample", bench_pair_sample, "sampled-pairs verification");
    bench_cmd->add_option("--csv", bench.csv, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) return cmd_generate(gen);
        if (*build_cmd) {
            if (build_pair_sample >= 0) build.pair_sample = build_pair_sample;
            if (build_mu >= 0) build.mu_override = build_mu;
            return cmd_build(build);
        }
        if (*verify_cmd) {
            if (verify_pair_sample >= 0) ver.pair_sample = verify_pair_sample;
            return cmd_verify(ver);
        }
        if (*bench_cmd) {
            if (bench_pair_sample >= 0) bench.pair_sample = bench_pair_sample;
            if (bench_mu >= 0) bench.mu_override = bench_mu;
            return cmd_bench(bench);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
