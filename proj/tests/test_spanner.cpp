#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"


#include "json.hpp"

#include "addspan/graph.hpp"
#include "addspan/oracle.hpp"
#include "addspan/spanner.hpp"

using namespace addspan;

namespace {

bool is_full_graph(const SpannerBuild& build, const Graph& g) {
    return build.spanner_edges.count() == g.edge_count();
}

Params params_with_mu(const Graph& g, int mu) {
    Params p = default_params(std::max(1, g.node_count()));
    p.mu = mu;
    const long long mu3 = static_cast<long long>(mu) * mu * mu;
    p.g = static_cast<int>((mu3 + g.node_count() - 1) / std::max(1, g.node_count())) + 2;
    return p;
}

} // namespace

TEST_CASE("heavy_nodes") {
    SUBCASE("star center only") {
        const Graph star = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        CHECK(heavy_nodes(star, 3) == std::vector<int>{0});
    }
    SUBCASE("mu=1 selects all non-isolated nodes") {
        const Graph g = build_graph(4, {{0, 1}, {1, 2}});
        CHECK(heavy_nodes(g, 1) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("matches an independent degree recount") {
        const Graph g = random_graph(200, 2000, 3);
        const int mu = default_params(200).mu;
        std::vector<int> recount;
        for (int v = 0; v < g.node_count(); ++v) {
            int deg = 0;
            for (int e = 0; e < g.edge_count(); ++e)
                deg += (g.edge(e).u == v) + (g.edge(e).v == v);
            if (deg >= mu) recount.push_back(v);
        }
        CHECK(heavy_nodes(g, mu) == recount);
    }
}

TEST_CASE("heavy_edge_set marks edges with two heavy endpoints") {
    SUBCASE("path endpoints are light") {
        const Graph g = build_graph(3, {{0, 1}, {1, 2}});
        CHECK(heavy_edge_set(g, 2).count() == 0);
    }
    SUBCASE("K4 with mu=3 is all gray") {
        const Graph g = random_graph(4, 6, 0);
        CHECK(heavy_edge_set(g, 3).count() == 6);
    }
    SUBCASE("triangle plus pendant") {
        // triangle 0-1-2 with pendant 3 on node 0: degrees 3,2,2,1
        const Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        const GrayEdgeSet gray = heavy_edge_set(g, 2);
        CHECK(gray.count() == 3);
        CHECK(gray.test(*g.find_edge(0, 1)));
        CHECK(gray.test(*g.find_edge(0, 2)));
        CHECK(gray.test(*g.find_edge(1, 2)));
        CHECK_FALSE(gray.test(*g.find_edge(0, 3)));
    }
}

TEST_CASE("lightweight_init") {
    SUBCASE("triangle keeps each node's lightest edge") {
        const Graph g =
            build_graph(3, std::vector<Edge>{{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}, true);
        const EdgeBitset init = lightweight_init(g, 1);
        CHECK(init.count() == 2);
        CHECK(init.test(*g.find_edge(0, 1)));
        CHECK(init.test(*g.find_edge(1, 2)));
        CHECK_FALSE(init.test(*g.find_edge(0, 2)));
    }
    SUBCASE("d at least the max degree keeps everything") {
        const Graph g = random_graph(30, 60, 2, WeightRange{1.0, 5.0});
        int max_deg = 0;
        for (int v = 0; v < g.node_count(); ++v) max_deg = std::max(max_deg, g.degree(v));
        CHECK(lightweight_init(g, max_deg).count() == g.edge_count());
    }
    SUBCASE("leaf picks keep every spoke of a uniform star") {
        const Graph star = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        CHECK(lightweight_init(star, 2).count() == 5);
    }
}

TEST_CASE("fast_plus4 trivial shapes") {
    SUBCASE("no heavy nodes means H equals G") {
        const Graph g = random_graph(50, 60, 4); // max degree stays below mu=40
        const SpannerBuild build = fast_plus4(g, params_with_mu(g, 40));
        CHECK(is_full_graph(build, g));
        CHECK(build.stage_counts.init == g.edge_count());
    }
    SUBCASE("single node") {
        const Graph g = build_graph(1, std::vector<std::pair<int, int>>{});
        const SpannerBuild build = fast_plus4(g, default_params(1));
        CHECK(build.spanner_edges.count() == 0);
    }
}

TEST_CASE("fast_plus4 structure on a random graph") {
    const Graph g = random_graph(300, 4000, 11);
    const Params params = [&] {
        Params p = default_params(300);
        p.seed = 11;
        return p;
    }();
    const SpannerBuild build = fast_plus4(g, params);

    SUBCASE("deterministic rebuild") {
        const SpannerBuild again = fast_plus4(g, params);
        CHECK(build == again);
    }
    SUBCASE("spanner is a subgraph with sane accounting") {
        CHECK(build.spanner_edges.size() == g.edge_count());
        CHECK(build.spanner_edges.count() <= g.edge_count());
        CHECK(build.stage_counts.sum() >= build.spanner_edges.count());
        // light-stage attempts = edges with a light endpoint
        long long light_edges = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.degree(g.edge(e).u) < params.mu || g.degree(g.edge(e).v) < params.mu)
                ++light_edges;
        }
        CHECK(build.stage_counts.init == light_edges);
        CHECK(build.stage_counts.s1_trees <=
              static_cast<long long>(build.s1.size()) * (g.node_count() - 1));
    }
    SUBCASE("coverage: heavy nodes outside the S2 neighborhood are covered") {
        std::vector<char> s2flag(g.node_count(), 0);
        for (int v : build.s2) s2flag[v] = 1;
        for (int v = 0; v < g.node_count(); ++v) {
            if (g.degree(v) < params.mu || s2flag[v]) continue;
            bool adjacent = false;
            for (const Adj& a : g.neighbors(v)) adjacent |= s2flag[a.to] != 0;
            if (adjacent) continue;
            for (const Adj& a : g.neighbors(v)) CHECK(build.spanner_edges.test(a.edge));
        }
    }
    SUBCASE("gray snapshot is the heavy edge set") {
        CHECK(build.gray_frozen == heavy_edge_set(g, params.mu));
    }
}

TEST_CASE("csssp path stage respects the gray budget whenever it must") {
    const Graph g = random_graph(40, 200, 7);
    const Params params = params_with_mu(g, 6);
    const GrayEdgeSet gray = heavy_edge_set(g, params.mu);
    const std::vector<int> s2 = {3, 17, 31};

    EdgeBitset out(g.edge_count());
    add_csssp_paths(g, s2, gray, params.g, out);

    for (int x1 : s2) {
        const PathTree tree = weak_csssp(g, x1, gray, params.g);
        for (int x2 : s2) {
            if (x1 == x2 || !tree.reachable(x2)) continue;
            for (int e : tree.path_edges(g, x2)) CHECK(out.test(e));
            if (oracle_gshort_exists(g, x1, x2, gray, params.g))
                CHECK(tree.gray_count[x2] <= 5 * params.g);
        }
    }
}

TEST_CASE("assign_clusters invariants") {
    const Graph g = random_graph(100, 600, 9);
    const std::vector<int> s2 = {5, 20, 77};
    const ClusterAssignment clusters = assign_clusters(g, s2, 8);
    for (std::size_t i = 0; i < clusters.centers.size(); ++i) {
        CHECK(clusters.members[i].front() == clusters.centers[i]);
    }
    for (int v = 0; v < g.node_count(); ++v) {
        if (!clusters.clustered(v)) continue;
        const int x = clusters.center[v];
        if (v == x) continue;
        CHECK(g.degree(v) >= 8);
        CHECK(g.find_edge(v, x).has_value());
        CHECK(std::find(s2.begin(), s2.end(), x) != s2.end());
    }
}

TEST_CASE("baseline cluster path stage: two clusters joined by a light path") {
    // Two triangles of heavy satellites around centers 0 and 4, bridged by
    // the light path 1-8-9-5. With mu=3, nodes 8 and 9 are light and the
    // only valid inter-cluster candidate is s=1, t=5 (two heavy path nodes).
    const Graph g = build_graph(10, {{0, 1},
                                     {0, 2},
                                     {0, 3},
                                     {1, 2},
                                     {2, 3},
                                     {1, 3},
                                     {4, 5},
                                     {4, 6},
                                     {4, 7},
                                     {5, 6},
                                     {6, 7},
                                     {5, 7},
                                     {1, 8},
                                     {8, 9},
                                     {9, 5}});
    const int mu = 3; // mu^3/n = 2.7, so at most two heavy nodes per path
    const ClusterAssignment clusters = assign_clusters(g, {0, 4}, mu);
    CHECK(clusters.members[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(clusters.members[1] == std::vector<int>{4, 5, 6, 7});

    EdgeBitset out(g.edge_count());
    const long long attempts = add_cluster_pair_paths(g, clusters, mu, out);
    CHECK(attempts == 5);
    CHECK(out.count() == 5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 8}, {8, 9}, {9, 5}, {5, 4}})
        CHECK(out.test(*g.find_edge(u, v)));
}

TEST_CASE("chechik_baseline") {
    SUBCASE("no heavy nodes means H equals G") {
        const Graph g = random_graph(50, 60, 4);
        const SpannerBuild build = chechik_baseline(g, params_with_mu(g, 40));
        CHECK(is_full_graph(build, g));
    }
    SUBCASE("rejects n above the APSP cap") {
        const Graph g = random_graph(50, 60, 4);
        CHECK_THROWS_AS(chechik_baseline(g, params_with_mu(g, 40), 20), std::invalid_argument);
    }
    SUBCASE("deterministic rebuild") {
        const Graph g = random_graph(120, 900, 5);
        Params p = default_params(120);
        p.seed = 5;
        CHECK(chechik_baseline(g, p) == chechik_baseline(g, p));
    }
}

TEST_CASE("weighted_plus4") {
    SUBCASE("low degree keeps the whole graph") {
        const Graph g = random_graph(60, 70, 6, WeightRange{1.0, 10.0});
        Params p = params_with_mu(g, 40);
        p.epsilon = 0.5;
        const SpannerBuild build = weighted_plus4(g, p);
        CHECK(is_full_graph(build, g));
    }
    SUBCASE("single edge graph survives any parameters") {
        const Graph g = build_graph(2, std::vector<Edge>{{0, 1, 3.5}}, true);
        Params p = default_params(2);
        p.epsilon = 0.25;
        const SpannerBuild build = weighted_plus4(g, p);
        CHECK(is_full_graph(build, g));
    }
    SUBCASE("requires epsilon") {
        const Graph g = random_graph(30, 40, 1, WeightRange{1.0, 2.0});
        CHECK_THROWS_AS(weighted_plus4(g, default_params(30)), std::invalid_argument);
    }
    SUBCASE("deterministic rebuild and frozen gray set") {
        const Graph g = random_graph(150, 1200, 8, WeightRange{1.0, 10.0});
        Params p = default_params(150);
        p.epsilon = 0.5;
        p.seed = 8;
        const SpannerBuild a = weighted_plus4(g, p);
        const SpannerBuild b = weighted_plus4(g, p);
        CHECK(a == b);
        // The frozen gray set is the complement of the pre-path spanner, so
        // every non-gray edge must already be in H.
        CHECK(a.gray_frozen.size() == g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!a.gray_frozen.test(e)) CHECK(a.spanner_edges.test(e));
        }
        // The initialization is in H, hence never gray.
        const EdgeBitset init = lightweight_init(g, p.mu);
        for (int e : init.to_vector()) CHECK_FALSE(a.gray_frozen.test(e));
    }
}

TEST_CASE("build_stats_json has the sidecar schema") {
    const Graph g = random_graph(80, 400, 2);
    Params p = default_params(80);
    p.seed = 2;
    const SpannerBuild build = fast_plus4(g, p);
    const auto j = nlohmann::json::parse(build_stats_json(build, g));
    for (const char* key :
         {"n", "m", "mu", "g", "seed", "s1_size", "s2_size", "stage_counts", "spanner_edges"})
        CHECK(j.contains(key));
    CHECK_FALSE(j.contains("epsilon")); // unweighted build
    CHECK(j["n"] == 80);
    CHECK(j["stage_counts"].contains("csssp_paths"));

    Params wp = p;
    wp.epsilon = 0.5;
    const Graph wg = random_graph(80, 400, 2, WeightRange{1.0, 4.0});
    const auto wj = nlohmann::json::parse(build_stats_json(weighted_plus4(wg, wp), wg));
    CHECK(wj["epsilon"] == 0.5);
}
