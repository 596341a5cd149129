// graph.hpp - Immutable undirected graph, parameter defaults, generation, I/O.

#ifndef ADDSPAN_GRAPH_HPP
#define ADDSPAN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addspan {

// Edge endpoints plus weight; weight is 1 for unweighted graphs.
struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;

    bool operator==(const Edge&) const = default;
};

// Adjacency entry: neighbor node and the id of the connecting edge.
struct Adj {
    int to = 0;
    int edge = 0;

    bool operator==(const Adj&) const = default;
};

// Simple undirected graph. Immutable once built; safe to share across
// threads. Adjacency lists are sorted by neighbor id so that every
// "arbitrarily choose" step downstream resolves to the lowest id.
class Graph {
public:
    Graph() = default;

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool weighted() const { return weighted_; }

    // W = max edge weight (1 for unweighted or empty graphs).
    double max_weight() const { return max_weight_; }

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Adj> neighbors(int v) const {
        return {adj_.data() + adj_off_[v], adj_.data() + adj_off_[v + 1]};
    }

    int degree(int v) const { return adj_off_[v + 1] - adj_off_[v]; }

    // Edge id joining u and v, if present.
    std::optional<int> find_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

    friend Graph build_graph(int n, std::vector<Edge> edges, bool weighted);

private:
    int n_ = 0;
    bool weighted_ = false;
    double max_weight_ = 1.0;
    std::vector<Edge> edges_;
    std::vector<int> adj_off_{0};
    std::vector<Adj> adj_;
};

// Validates and assembles a Graph. Rejects self-loops, parallel edges,
// out-of-range node ids and non-positive weights.
Graph build_graph(int n, std::vector<Edge> edges, bool weighted);

// Unweighted convenience overload.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Construction parameters. mu is the heaviness threshold, g the gray-edge
// budget for the constrained path stage, epsilon the weighted error knob.
struct Params {
    int mu = 1;
    int g = 3;
    double epsilon = 0.0; // 0 = unset; weighted constructions require (0,1)
    std::uint64_t seed = 0;

    bool operator==(const Params&) const = default;
};

// mu = ceil(n^{2/5} * (ln n)^{1/5}) with ln 1 treated as 1,
// g = ceil(mu^3 / n) + 2.
Params default_params(int n);

void validate_params(const Params& params, bool weighted);

struct WeightRange {
    double lo = 1.0;
    double hi = 1.0;
};

// Uniform simple graph on exactly m edges, deterministic per seed.
Graph random_graph(int n, long long m, std::uint64_t seed);
Graph random_graph(int n, long long m, std::uint64_t seed, WeightRange weights);

// Edge-list text format: first line "n m"; then m lines "u v" (unweighted)
// or "u v w" (weighted); '#'-prefixed lines are comments; LF endings.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

} // namespace addspan

#endif
