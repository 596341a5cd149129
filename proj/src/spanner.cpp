#include "addspan/spanner.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <stdexcept>

#include "json.hpp"

#include "addspan/parallel.hpp"
#include "addspan/rng.hpp"
#include "addspan/search.hpp"

namespace addspan {

namespace {

std::vector<char> heavy_flags(const Graph& g, int mu) {
    std::vector<char> heavy(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v) heavy[v] = g.degree(v) >= mu;
    return heavy;
}

std::vector<char> membership_flags(int n, const std::vector<int>& nodes) {
    std::vector<char> flag(n, 0);
    for (int v : nodes) flag[v] = 1;
    return flag;
}

// Edges with at least one light endpoint.
long long add_light_edges(const Graph& g, const std::vector<char>& heavy, EdgeBitset& out) {
    long long attempts = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (!heavy[edge.u] || !heavy[edge.v]) {
            out.insert(e);
            ++attempts;
        }
    }
    return attempts;
}

// One tree per source, solved concurrently; union and attempt counts are
// order-independent, so the result does not depend on the worker count.
template <typename TreeFn>
long long add_source_trees(const Graph& g, const std::vector<int>& sources, TreeFn&& tree_edges,
                           EdgeBitset& out) {
    const unsigned workers = default_worker_count(sources.size());
    std::vector<EdgeBitset> local(workers, EdgeBitset(g.edge_count()));
    std::vector<long long> counts(workers, 0);
    parallel_for(sources.size(), workers, [&](std::size_t i, unsigned w) {
        counts[w] += tree_edges(sources[i], local[w]);
    });
    long long attempts = 0;
    for (unsigned w = 0; w < workers; ++w) {
        out.unite(local[w]);
        attempts += counts[w];
    }
    return attempts;
}

long long add_bfs_trees(const Graph& g, const std::vector<int>& sources, EdgeBitset& out) {
    return add_source_trees(
        g, sources,
        [&](int source, EdgeBitset& bits) {
            const BfsTree tree = bfs_tree(g, source);
            long long added = 0;
            for (int e : tree.parent_edge) {
                if (e >= 0) {
                    bits.insert(e);
                    ++added;
                }
            }
            return added;
        },
        out);
}

long long add_spt_trees(const Graph& g, const std::vector<int>& sources, EdgeBitset& out) {
    return add_source_trees(
        g, sources,
        [&](int source, EdgeBitset& bits) {
            const DijkstraTree tree = dijkstra(g, source);
            long long added = 0;
            for (int e : tree.parent_edge) {
                if (e >= 0) {
                    bits.insert(e);
                    ++added;
                }
            }
            return added;
        },
        out);
}

// All incident edges of every node whose closed neighborhood (in the graph
// given by `edge_filter`, or in G when absent) misses S2.
long long add_uncovered_node_edges(const Graph& g, const std::vector<char>& s2flag,
                                   const std::vector<char>& eligible,
                                   const EdgeBitset* neighborhood_filter, EdgeBitset& out) {
    long long attempts = 0;
    for (int x = 0; x < g.node_count(); ++x) {
        if (!eligible[x]) continue;
        bool covered = s2flag[x] != 0;
        if (!covered) {
            for (const Adj& a : g.neighbors(x)) {
                if (neighborhood_filter && !neighborhood_filter->test(a.edge)) continue;
                if (s2flag[a.to]) {
                    covered = true;
                    break;
                }
            }
        }
        if (covered) continue;
        for (const Adj& a : g.neighbors(x)) {
            out.insert(a.edge);
            ++attempts;
        }
    }
    return attempts;
}

// One edge from each heavy non-S2 node to its lowest-id S2 neighbor.
long long add_center_links(const Graph& g, const std::vector<char>& heavy,
                           const std::vector<char>& s2flag, EdgeBitset& out) {
    long long attempts = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        if (!heavy[v] || s2flag[v]) continue;
        for (const Adj& a : g.neighbors(v)) {
            if (s2flag[a.to]) {
                out.insert(a.edge);
                ++attempts;
                break;
            }
        }
    }
    return attempts;
}

double clamp_probability(double p) { return p > 1.0 ? 1.0 : p; }

template <typename SolveFn>
long long add_paths_between(const Graph& g, const std::vector<int>& s2, SolveFn&& solve,
                            EdgeBitset& out) {
    const unsigned workers = default_worker_count(s2.size());
    std::vector<EdgeBitset> local(workers, EdgeBitset(g.edge_count()));
    std::vector<long long> counts(workers, 0);
    parallel_for(s2.size(), workers, [&](std::size_t i, unsigned w) {
        const PathTree tree = solve(s2[i]);
        for (int x2 : s2) {
            if (x2 == s2[i] || !tree.reachable(x2)) continue;
            int v = x2;
            while (tree.parent_edge[v] != -1) {
                const int e = tree.parent_edge[v];
                local[w].insert(e);
                ++counts[w];
                v = (g.edge(e).u == v) ? g.edge(e).v : g.edge(e).u;
            }
        }
    });
    long long attempts = 0;
    for (unsigned w = 0; w < workers; ++w) {
        out.unite(local[w]);
        attempts += counts[w];
    }
    return attempts;
}

} // namespace

std::vector<int> heavy_nodes(const Graph& g, int mu) {
    std::vector<int> out;
    for (int v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) >= mu) out.push_back(v);
    }
    return out;
}

GrayEdgeSet heavy_edge_set(const Graph& g, int mu) {
    const auto heavy = heavy_flags(g, mu);
    GrayEdgeSet gray(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (heavy[g.edge(e).u] && heavy[g.edge(e).v]) gray.insert(e);
    }
    return gray;
}

EdgeBitset lightweight_init(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("lightweight_init: d must be >= 1");
    EdgeBitset out(g.edge_count());
    std::vector<std::pair<double, int>> incident;
    for (int v = 0; v < g.node_count(); ++v) {
        incident.clear();
        for (const Adj& a : g.neighbors(v)) incident.emplace_back(g.edge(a.edge).w, a.edge);
        const std::size_t take = std::min<std::size_t>(incident.size(), d);
        std::partial_sort(incident.begin(), incident.begin() + take, incident.end());
        for (std::size_t i = 0; i < take; ++i) out.insert(incident[i].second);
    }
    return out;
}

ClusterAssignment assign_clusters(const Graph& g, const std::vector<int>& s2, int mu) {
    const int n = g.node_count();
    const auto heavy = heavy_flags(g, mu);
    ClusterAssignment clusters;
    clusters.center.assign(n, -1);
    clusters.centers = s2;
    std::sort(clusters.centers.begin(), clusters.centers.end());
    clusters.members.resize(clusters.centers.size());

    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < clusters.centers.size(); ++i) {
        const int x = clusters.centers[i];
        index[x] = static_cast<int>(i);
        clusters.center[x] = x;
        clusters.members[i].push_back(x);
    }
    for (int v = 0; v < n; ++v) {
        if (!heavy[v] || clusters.center[v] >= 0) continue;
        for (const Adj& a : g.neighbors(v)) {
            if (index[a.to] >= 0) {
                clusters.center[v] = a.to;
                clusters.members[index[a.to]].push_back(v);
                break;
            }
        }
    }
    return clusters;
}

long long add_cluster_pair_paths(const Graph& g, const ClusterAssignment& clusters, int mu,
                                 EdgeBitset& out) {
    const int n = g.node_count();
    const long long mu3 = static_cast<long long>(mu) * mu * mu;
    const auto heavy = heavy_flags(g, mu);

    std::vector<int> clustered;
    for (int v = 0; v < n; ++v) {
        if (clusters.clustered(v)) clustered.push_back(v);
    }

    struct Candidate {
        int len;
        int s;
        int t;
    };
    std::map<std::pair<int, int>, Candidate> best; // unordered center pair -> winner

    for (int s : clustered) {
        const BfsTree tree = canonical_bfs(g, s);
        const int xs = clusters.center[s];
        for (int t : clustered) {
            if (t == s || tree.dist[t] < 0) continue;
            const int xt = clusters.center[t];
            if (xt == xs) continue;
            int heavy_on_path = 0;
            for (int v = t; v != -1; v = tree.parent[v]) heavy_on_path += heavy[v];
            if (static_cast<long long>(heavy_on_path) * n > mu3) continue;
            const int len = tree.dist[t] + (xs != s ? 1 : 0) + (xt != t ? 1 : 0);
            const std::pair<int, int> key{std::min(xs, xt), std::max(xs, xt)};
            auto it = best.find(key);
            if (it == best.end()) {
                best.emplace(key, Candidate{len, s, t});
            } else if (len < it->second.len) {
                it->second = Candidate{len, s, t};
            }
        }
    }

    // Materialize winners; regroup by path source so each BFS is reused.
    std::vector<Candidate> winners;
    winners.reserve(best.size());
    for (const auto& [key, cand] : best) winners.push_back(cand);
    std::sort(winners.begin(), winners.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.s, a.t) < std::tie(b.s, b.t);
    });

    long long attempts = 0;
    BfsTree tree;
    int tree_source = -1;
    for (const Candidate& cand : winners) {
        if (cand.s != tree_source) {
            tree = canonical_bfs(g, cand.s);
            tree_source = cand.s;
        }
        const int xs = clusters.center[cand.s];
        const int xt = clusters.center[cand.t];
        if (xs != cand.s) {
            out.insert(g.find_edge(xs, cand.s).value());
            ++attempts;
        }
        for (int v = cand.t; tree.parent_edge[v] != -1; v = tree.parent[v]) {
            out.insert(tree.parent_edge[v]);
            ++attempts;
        }
        if (xt != cand.t) {
            out.insert(g.find_edge(cand.t, xt).value());
            ++attempts;
        }
    }
    return attempts;
}

long long add_csssp_paths(const Graph& g, const std::vector<int>& s2, const GrayEdgeSet& gray,
                          int gray_budget, EdgeBitset& out) {
    return add_paths_between(
        g, s2, [&](int x1) { return weak_csssp(g, x1, gray, gray_budget); }, out);
}

long long add_weighted_csssp_paths(const Graph& g, const std::vector<int>& s2,
                                   const GrayEdgeSet& gray, int gray_budget, double epsilon,
                                   EdgeBitset& out) {
    return add_paths_between(
        g, s2, [&](int x1) { return weighted_weak_csssp(g, x1, gray, gray_budget, epsilon); },
        out);
}

SpannerBuild fast_plus4(const Graph& g, const Params& params) {
    if (g.weighted()) throw std::invalid_argument("fast_plus4: graph must be unweighted");
    validate_params(params, /*weighted=*/false);

    const int n = g.node_count();
    const auto heavy = heavy_flags(g, params.mu);

    SpannerBuild build;
    build.params = params;
    build.spanner_edges = EdgeBitset(g.edge_count());

    build.stage_counts.init = add_light_edges(g, heavy, build.spanner_edges);

    const double p1 = clamp_probability(9.0 * params.mu / std::max(n, 1));
    build.s1 = bernoulli_sample(n, p1, params.seed, stream::kS1);
    build.stage_counts.s1_trees = add_bfs_trees(g, build.s1, build.spanner_edges);

    const double p2 = clamp_probability(1.0 / params.mu);
    build.s2 = bernoulli_sample(n, p2, params.seed, stream::kS2);
    const auto s2flag = membership_flags(n, build.s2);

    build.stage_counts.coverage =
        add_uncovered_node_edges(g, s2flag, heavy, nullptr, build.spanner_edges);
    build.stage_counts.cluster_links = add_center_links(g, heavy, s2flag, build.spanner_edges);

    build.gray_frozen = heavy_edge_set(g, params.mu);
    build.stage_counts.csssp_paths =
        add_csssp_paths(g, build.s2, build.gray_frozen, params.g, build.spanner_edges);
    return build;
}

SpannerBuild chechik_baseline(const Graph& g, const Params& params, int apsp_cap) {
    if (g.weighted()) throw std::invalid_argument("chechik_baseline: graph must be unweighted");
    validate_params(params, /*weighted=*/false);
    if (g.node_count() > apsp_cap)
        throw std::invalid_argument(
            "chechik_baseline: n exceeds the all-pairs BFS cap of " + std::to_string(apsp_cap) +
            "; use fast_plus4 or raise the cap");

    const int n = g.node_count();
    const auto heavy = heavy_flags(g, params.mu);

    SpannerBuild build;
    build.params = params;
    build.spanner_edges = EdgeBitset(g.edge_count());
    build.gray_frozen = GrayEdgeSet(g.edge_count()); // no constrained path stage

    build.stage_counts.init = add_light_edges(g, heavy, build.spanner_edges);

    const double p1 = clamp_probability(9.0 * params.mu / std::max(n, 1));
    build.s1 = bernoulli_sample(n, p1, params.seed, stream::kS1);
    build.stage_counts.s1_trees = add_bfs_trees(g, build.s1, build.spanner_edges);

    const double p2 = clamp_probability(1.0 / params.mu);
    build.s2 = bernoulli_sample(n, p2, params.seed, stream::kS2);
    const auto s2flag = membership_flags(n, build.s2);

    build.stage_counts.coverage =
        add_uncovered_node_edges(g, s2flag, heavy, nullptr, build.spanner_edges);

    const ClusterAssignment clusters = assign_clusters(g, build.s2, params.mu);
    long long links = 0;
    for (int v = 0; v < n; ++v) {
        if (!heavy[v] || s2flag[v] || !clusters.clustered(v)) continue;
        build.spanner_edges.insert(g.find_edge(clusters.center[v], v).value());
        ++links;
    }
    build.stage_counts.cluster_links = links;

    build.stage_counts.csssp_paths =
        add_cluster_pair_paths(g, clusters, params.mu, build.spanner_edges);
    return build;
}

SpannerBuild weighted_plus4(const Graph& g, const Params& params) {
    validate_params(params, /*weighted=*/true);

    const int n = g.node_count();

    SpannerBuild build;
    build.params = params;
    build.spanner_edges = lightweight_init(g, params.mu);
    {
        long long attempts = 0;
        for (int v = 0; v < n; ++v) attempts += std::min(g.degree(v), params.mu);
        build.stage_counts.init = attempts;
    }
    const EdgeBitset init_snapshot = build.spanner_edges; // H0

    const double p2 = clamp_probability(1.0 / params.mu);
    build.s2 = bernoulli_sample(n, p2, params.seed, stream::kS2);
    const auto s2flag = membership_flags(n, build.s2);

    // Every node whose closed neighborhood *within the initialization* misses
    // S2 gets all of its incident edges.
    std::vector<char> all_nodes(n, 1);
    build.stage_counts.coverage =
        add_uncovered_node_edges(g, s2flag, all_nodes, &init_snapshot, build.spanner_edges);

    const double p1 = clamp_probability(9.0 * params.mu / std::max(n, 1));
    build.s1 = bernoulli_sample(n, p1, params.seed, stream::kS1);
    build.stage_counts.s1_trees = add_spt_trees(g, build.s1, build.spanner_edges);

    // Gray = everything still missing, frozen before any path is added; the
    // per-source solves then stay independent.
    build.gray_frozen = build.spanner_edges.complement();
    build.stage_counts.csssp_paths = add_weighted_csssp_paths(
        g, build.s2, build.gray_frozen, params.g, params.epsilon, build.spanner_edges);
    return build;
}

std::string build_stats_json(const SpannerBuild& build, const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.node_count();
    j["m"] = g.edge_count();
    j["mu"] = build.params.mu;
    j["g"] = build.params.g;
    if (build.params.epsilon > 0.0) j["epsilon"] = build.params.epsilon;
    j["seed"] = build.params.seed;
    j["s1_size"] = build.s1.size();
    j["s2_size"] = build.s2.size();
    j["stage_counts"] = {{"init", build.stage_counts.init},
                         {"s1_trees", build.stage_counts.s1_trees},
                         {"coverage", build.stage_counts.coverage},
                         {"cluster_links", build.stage_counts.cluster_links},
                         {"csssp_paths", build.stage_counts.csssp_paths}};
    j["spanner_edges"] = build.spanner_edges.count();
    return j.dump(2) + "\n";
}

} // namespace addspan
