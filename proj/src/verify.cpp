#include "addspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "addspan/rng.hpp"
#include "addspan/search.hpp"

namespace addspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxReportedViolations = 100;

Graph subgraph_of(const Graph& g, const EdgeBitset& h) {
    if (h.size() != g.edge_count())
        throw std::invalid_argument("verify: spanner bitset does not match the graph's edges");
    std::vector<Edge> edges;
    edges.reserve(h.count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (h.test(e)) edges.push_back(g.edge(e));
    }
    return build_graph(g.node_count(), std::move(edges), g.weighted());
}

// (s,t) pairs to sweep, grouped by source: either every source (t > s), or a
// deterministic uniform sample.
struct PairPlan {
    bool all_pairs = false;
    std::vector<std::pair<int, int>> sampled; // sorted by source
};

PairPlan plan_pairs(int n, const VerifyOptions& opts, const char* who) {
    PairPlan plan;
    if (!opts.pair_sample) {
        if (n > opts.apsp_cap)
            throw std::invalid_argument(std::string(who) +
                                        ": n exceeds the all-pairs cap; set pair_sample");
        plan.all_pairs = true;
        return plan;
    }
    if (n < 2) return plan;
    Rng rng(opts.seed ^ stream::kPairs);
    plan.sampled.reserve(static_cast<std::size_t>(*opts.pair_sample));
    for (long long i = 0; i < *opts.pair_sample; ++i) {
        int s, t;
        do {
            s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        } while (s == t);
        plan.sampled.emplace_back(s, t);
    }
    std::sort(plan.sampled.begin(), plan.sampled.end());
    return plan;
}

struct PairAccumulator {
    StretchReport report;
    double tolerance = 0.0;

    void account(int s, int t, double surplus) {
        ++report.pairs_checked;
        if (!report.worst_pair || surplus > report.max_surplus) {
            report.max_surplus = surplus;
            report.worst_pair = {s, t};
        }
        if (surplus > tolerance) {
            ++report.violations;
            if (report.violating_pairs.size() < kMaxReportedViolations)
                report.violating_pairs.emplace_back(s, t, surplus);
        }
    }
};

} // namespace

StretchReport verify_additive_stretch(const Graph& g, const EdgeBitset& h, int k,
                                      const VerifyOptions& opts) {
    if (g.weighted())
        throw std::invalid_argument("verify_additive_stretch: graph must be unweighted");
    const Graph hg = subgraph_of(g, h);
    const int n = g.node_count();
    const PairPlan plan = plan_pairs(n, opts, "verify_additive_stretch");

    PairAccumulator acc;
    acc.report.bound_kind = "+k";

    auto sweep_source = [&](int s, auto&& target_of) {
        const BfsTree in_g = bfs_tree(g, s);
        const BfsTree in_h = bfs_tree(hg, s);
        target_of([&](int t) {
            if (in_g.dist[t] < 0) return; // unreachable pairs are excluded
            const double dist_h = in_h.dist[t] < 0 ? kInf : in_h.dist[t];
            acc.account(s, t, dist_h - in_g.dist[t] - k);
        });
    };

    if (plan.all_pairs) {
        for (int s = 0; s < n; ++s) {
            sweep_source(s, [&](auto&& visit) {
                for (int t = s + 1; t < n; ++t) visit(t);
            });
        }
    } else {
        for (std::size_t i = 0; i < plan.sampled.size();) {
            const int s = plan.sampled[i].first;
            std::size_t j = i;
            while (j < plan.sampled.size() && plan.sampled[j].first == s) ++j;
            sweep_source(s, [&](auto&& visit) {
                for (std::size_t p = i; p < j; ++p) visit(plan.sampled[p].second);
            });
            i = j;
        }
    }
    return acc.report;
}

StretchReport verify_weighted_stretch(const Graph& g, const EdgeBitset& h, double epsilon,
                                      const VerifyOptions& opts) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("verify_weighted_stretch: epsilon must lie in (0,1)");
    const Graph hg = subgraph_of(g, h);
    const int n = g.node_count();
    const double w_max = g.max_weight();
    const double tol = 1e-9 * w_max;
    const PairPlan plan = plan_pairs(n, opts, "verify_weighted_stretch");

    PairAccumulator acc;
    acc.report.bound_kind = "+4W(s,t)+epsW";
    acc.tolerance = tol;

    auto sweep_source = [&](int s, auto&& target_of) {
        const DijkstraTree in_g = dijkstra(g, s);
        const DijkstraTree in_h = dijkstra(hg, s);
        const std::vector<double> bottleneck = minimax_shortest_weights(g, s, opts.canonical_w);
        target_of([&](int t) {
            if (in_g.dist[t] == kInf) return;
            const double bound = in_g.dist[t] + 4.0 * bottleneck[t] + epsilon * w_max;
            acc.account(s, t, in_h.dist[t] - bound);
        });
    };

    if (plan.all_pairs) {
        for (int s = 0; s < n; ++s) {
            sweep_source(s, [&](auto&& visit) {
                for (int t = s + 1; t < n; ++t) visit(t);
            });
        }
    } else {
        for (std::size_t i = 0; i < plan.sampled.size();) {
            const int s = plan.sampled[i].first;
            std::size_t j = i;
            while (j < plan.sampled.size() && plan.sampled[j].first == s) ++j;
            sweep_source(s, [&](auto&& visit) {
                for (std::size_t p = i; p < j; ++p) visit(plan.sampled[p].second);
            });
            i = j;
        }
    }
    return acc.report;
}

std::vector<double> minimax_shortest_weights(const Graph& g, int source, bool canonical) {
    const int n = g.node_count();
    const double tol = 1e-9 * g.max_weight();
    const DijkstraTree in_g = dijkstra(g, source);

    std::vector<double> bottleneck(n, kInf);
    bottleneck[source] = 0.0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (in_g.dist[a] != in_g.dist[b]) return in_g.dist[a] < in_g.dist[b];
        return a < b;
    });
    // Processing in distance order makes every DAG predecessor final before
    // its successors (edge weights are strictly positive).
    for (int v : order) {
        if (v == source || in_g.dist[v] == kInf) continue;
        if (canonical) {
            const Edge& e = g.edge(in_g.parent_edge[v]);
            const int u = (e.u == v) ? e.v : e.u;
            bottleneck[v] = std::max(bottleneck[u], e.w);
            continue;
        }
        for (const Adj& a : g.neighbors(v)) {
            const double w = g.edge(a.edge).w;
            if (std::abs(in_g.dist[a.to] + w - in_g.dist[v]) <= tol)
                bottleneck[v] = std::min(bottleneck[v], std::max(bottleneck[a.to], w));
        }
    }
    return bottleneck;
}

int heavy_dist(const Graph& g, const std::vector<int>& path, int mu) {
    int count = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (v < 0 || v >= g.node_count())
            throw std::out_of_range("heavy_dist: node id out of range");
        if (i > 0 && !g.find_edge(path[i - 1], v))
            throw std::invalid_argument("heavy_dist: non-adjacent consecutive nodes " +
                                        std::to_string(path[i - 1]) + "," + std::to_string(v));
        if (g.degree(v) >= mu) ++count;
    }
    return count;
}

LemmaCheckResult check_three_neighbors_lemma(const Graph& g, int trials, std::uint64_t seed) {
    LemmaCheckResult result;
    const int n = g.node_count();
    if (n < 2 || trials <= 0) return result;

    Rng rng(seed ^ stream::kTrials);
    std::vector<char> on_path(n, 0);
    for (int trial = 0; trial < trials; ++trial) {
        int s, t;
        do {
            s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            t = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        } while (s == t);
        ++result.trials;

        const BfsTree tree = canonical_bfs(g, s);
        if (tree.dist[t] < 0) continue;
        const std::vector<int> path = path_nodes(tree, t);
        for (int v : path) on_path[v] = 1;
        for (int v = 0; v < n && result.pass; ++v) {
            int neighbors_on_path = 0;
            for (const Adj& a : g.neighbors(v)) neighbors_on_path += on_path[a.to];
            if (neighbors_on_path > 3) {
                result.pass = false;
                result.witness = {v, s, t, neighbors_on_path};
            }
        }
        for (int v : path) on_path[v] = 0;
        if (!result.pass) break;
    }
    return result;
}

SizeReport size_report(const SpannerBuild& build, const Graph& g) {
    SizeReport report;
    report.edges = build.spanner_edges.count();
    const double n_mu = static_cast<double>(g.node_count()) * build.params.mu;
    report.ratio_to_n_mu = n_mu > 0.0 ? report.edges / n_mu : 0.0;
    report.stages = build.stage_counts;
    return report;
}

std::string StretchReport::to_json() const {
    nlohmann::ordered_json j;
    j["bound_kind"] = bound_kind;
    if (pairs_checked > 0 && std::isfinite(max_surplus))
        j["max_surplus"] = max_surplus;
    else
        j["max_surplus"] = nullptr;
    if (worst_pair)
        j["worst_pair"] = {worst_pair->first, worst_pair->second};
    else
        j["worst_pair"] = nullptr;
    j["violations"] = violations;
    j["pairs_checked"] = pairs_checked;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [s, t, surplus] : violating_pairs) {
        arr.push_back({s, t, std::isfinite(surplus) ? nlohmann::ordered_json(surplus)
                                                    : nlohmann::ordered_json(nullptr)});
    }
    j["violating_pairs"] = arr;
    return j.dump(2) + "\n";
}

std::string SizeReport::to_json() const {
    nlohmann::ordered_json j;
    j["edges"] = edges;
    j["ratio_to_n_mu"] = ratio_to_n_mu;
    j["stage_counts"] = {{"init", stages.init},
                         {"s1_trees", stages.s1_trees},
                         {"coverage", stages.coverage},
                         {"cluster_links", stages.cluster_links},
                         {"csssp_paths", stages.csssp_paths}};
    return j.dump(2) + "\n";
}

} // namespace addspan
