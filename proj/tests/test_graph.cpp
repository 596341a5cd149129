#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"


#include "addspan/graph.hpp"
#include "addspan/rng.hpp"

using namespace addspan;

TEST_CASE("build_graph assembles a path graph") {
    const Graph g = build_graph(3, {{0, 1}, {1, 2}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.max_weight() == 1.0);
    CHECK_FALSE(g.weighted());
    CHECK(g.degree(1) == 2);
    CHECK(g.find_edge(2, 1) == 1);
    CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 0}}), doctest::Contains("self-loop at node 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        build_graph(3, std::vector<Edge>{{0, 1, 2.5}, {0, 1, 3.0}}, true),
        doctest::Contains("parallel edge (0,1)"), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, std::vector<Edge>{{1, 0, 2.5}, {0, 1, 3.0}}, true),
                    std::invalid_argument); // reversed duplicates too
    CHECK_THROWS_AS(build_graph(2, std::vector<Edge>{{0, 1, 0.0}}, true), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 3}}), std::out_of_range);
}

TEST_CASE("adjacency is sorted and sums to 2m") {
    const Graph g = random_graph(50, 200, 17);
    long long total = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 1; i < nbrs.size(); ++i) CHECK(nbrs[i - 1].to < nbrs[i].to);
        total += g.degree(v);
    }
    CHECK(total == 2 * g.edge_count());
}

TEST_CASE("default_params evaluates the mu and g formulas") {
    SUBCASE("n=1024") {
        const Params p = default_params(1024);
        CHECK(p.mu == 24);
        CHECK(p.g == 16); // ceil(24^3/1024) + 2
    }
    SUBCASE("n=1 degenerates") {
        const Params p = default_params(1);
        CHECK(p.mu == 1);
        CHECK(p.g == 3);
    }
    SUBCASE("n=100000") {
        const Params p = default_params(100000);
        CHECK(p.mu == 164);
    }
}

TEST_CASE("validate_params") {
    Params p = default_params(100);
    CHECK_NOTHROW(validate_params(p, false));
    p.epsilon = 0.5;
    CHECK_THROWS_AS(validate_params(p, false), std::invalid_argument);
    CHECK_NOTHROW(validate_params(p, true));
    p.epsilon = 1.0;
    CHECK_THROWS_AS(validate_params(p, true), std::invalid_argument);
    p.epsilon = 0.5;
    p.mu = 0;
    CHECK_THROWS_AS(validate_params(p, true), std::invalid_argument);
}

TEST_CASE("random_graph with m = n(n-1)/2 is the complete graph") {
    const Graph g = random_graph(4, 6, 7);
    CHECK(g.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(g.find_edge(u, v).has_value());
}

TEST_CASE("random_graph is reproducible and seed-sensitive") {
    const Graph a = random_graph(100, 300, 1);
    const Graph b = random_graph(100, 300, 1);
    CHECK(a == b);
    const Graph c = random_graph(100, 300, 2);
    CHECK(a.edges() != c.edges());

    const Graph w1 = random_graph(100, 300, 9, WeightRange{1.0, 10.0});
    const Graph w2 = random_graph(100, 300, 9, WeightRange{1.0, 10.0});
    CHECK(w1 == w2);
    for (const Edge& e : w1.edges()) {
        CHECK(e.w >= 1.0);
        CHECK(e.w <= 10.0);
    }
}

TEST_CASE("random_graph rejects impossible m") {
    CHECK_THROWS_AS(random_graph(4, 7, 0), std::invalid_argument);
}

TEST_CASE("parse_edge_list basics") {
    const Graph g = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.weighted());

    const Graph w = parse_edge_list("3 1\n0 1 2.5\n");
    CHECK(w.weighted());
    CHECK(w.max_weight() == 2.5);

    const Graph commented = parse_edge_list("# header comment\n3 2\n0 1\n# middle\n1 2\n");
    CHECK(commented == g);
}

TEST_CASE("parse_edge_list reports the offending line") {
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 3\n"),
                         doctest::Contains("node id out of range, line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"), doctest::Contains("expected 2 edges"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\nx y\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 2\n0 1\n0 1 3.5\n"), doctest::Contains("line 3"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_edge_list(""), std::runtime_error);
}

TEST_CASE("parse is the inverse of serialize") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = random_graph(40, 120, seed);
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
        const Graph w = random_graph(40, 120, seed, WeightRange{0.5, 100.0});
        CHECK(parse_edge_list(serialize_edge_list(w)) == w);
    }
}

TEST_CASE("format_double round-trips awkward values") {
    for (double x : {2.5, 0.1, 1.0 / 3.0, 1e-17, 12345678.875, 1.0}) {
        CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
    }
}

TEST_CASE("bernoulli_sample hits both trivial probabilities") {
    CHECK(bernoulli_sample(10, 1.0, 3, stream::kS1).size() == 10);
    CHECK(bernoulli_sample(10, 0.0, 3, stream::kS1).empty());
    CHECK(bernoulli_sample(1000, 0.5, 3, stream::kS1) == bernoulli_sample(1000, 0.5, 3, stream::kS1));
    CHECK(bernoulli_sample(1000, 0.5, 3, stream::kS1) != bernoulli_sample(1000, 0.5, 4, stream::kS1));
}
