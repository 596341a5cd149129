#include "addspan/csssp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace addspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kInfScaled = std::numeric_limits<std::uint64_t>::max();

void check_inputs(const Graph& g, int source, const GrayEdgeSet& gray, int gray_budget,
                  const char* who) {
    if (source < 0 || source >= g.node_count())
        throw std::out_of_range(std::string(who) + ": source node out of range");
    if (gray.size() != g.edge_count())
        throw std::invalid_argument(std::string(who) + ": gray set does not match graph");
    if (gray_budget < 1)
        throw std::invalid_argument(std::string(who) + ": gray budget must be >= 1");
}

// Fill true_length / gray_count by walking nodes in settle order; a node's
// parent always has strictly smaller punished distance.
template <typename Dist>
void fill_path_stats(const Graph& g, const GrayEdgeSet& gray, const std::vector<Dist>& dist,
                     Dist unreachable, PathTree& tree) {
    const int n = g.node_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return a < b;
    });
    tree.true_length.assign(n, kInf);
    tree.gray_count.assign(n, 0);
    tree.true_length[tree.source] = 0.0;
    for (int v : order) {
        if (v == tree.source || dist[v] == unreachable) continue;
        const Edge& e = g.edge(tree.parent_edge[v]);
        const int parent = (e.u == v) ? e.v : e.u;
        tree.true_length[v] = tree.true_length[parent] + (g.weighted() ? e.w : 1.0);
        tree.gray_count[v] = tree.gray_count[parent] + (gray.test(tree.parent_edge[v]) ? 1 : 0);
    }
}

} // namespace

std::vector<int> PathTree::path_edges(const Graph& g, int t) const {
    if (!reachable(t)) throw std::invalid_argument("PathTree: target unreachable");
    std::vector<int> edges;
    int v = t;
    while (parent_edge[v] != -1) {
        const int e = parent_edge[v];
        edges.push_back(e);
        v = (g.edge(e).u == v) ? g.edge(e).v : g.edge(e).u;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

std::vector<int> PathTree::path_nodes(const Graph& g, int t) const {
    if (!reachable(t)) throw std::invalid_argument("PathTree: target unreachable");
    std::vector<int> nodes;
    int v = t;
    nodes.push_back(v);
    while (parent_edge[v] != -1) {
        const int e = parent_edge[v];
        v = (g.edge(e).u == v) ? g.edge(e).v : g.edge(e).u;
        nodes.push_back(v);
    }
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

PathTree weak_csssp(const Graph& g, int source, const GrayEdgeSet& gray, int gray_budget) {
    check_inputs(g, source, gray, gray_budget, "weak_csssp");
    if (g.weighted()) throw std::invalid_argument("weak_csssp: graph must be unweighted");

    const int n = g.node_count();
    // Punished weights scaled by g: plain edge costs g, gray edge g+1. All
    // arithmetic stays in exact integers, so ties are decided exactly.
    const std::uint64_t plain = static_cast<std::uint64_t>(gray_budget);
    const std::uint64_t punished = plain + 1;

    PathTree tree;
    tree.source = source;
    tree.parent_edge.assign(n, -1);
    tree.punished_scaled.assign(n, kInfScaled);
    tree.scale = plain;

    using Entry = std::pair<std::uint64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    tree.punished_scaled[source] = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != tree.punished_scaled[u]) continue;
        for (const Adj& a : g.neighbors(u)) {
            const std::uint64_t nd = d + (gray.test(a.edge) ? punished : plain);
            if (nd < tree.punished_scaled[a.to]) {
                tree.punished_scaled[a.to] = nd;
                tree.parent_edge[a.to] = a.edge;
                pq.emplace(nd, a.to);
            }
        }
    }

    tree.punished_dist.assign(n, kInf);
    for (int v = 0; v < n; ++v) {
        if (tree.punished_scaled[v] != kInfScaled)
            tree.punished_dist[v] =
                static_cast<double>(tree.punished_scaled[v]) / static_cast<double>(plain);
    }
    fill_path_stats(g, gray, tree.punished_scaled, kInfScaled, tree);
    return tree;
}

PathTree weighted_weak_csssp(const Graph& g, int source, const GrayEdgeSet& gray, int gray_budget,
                             double epsilon) {
    check_inputs(g, source, gray, gray_budget, "weighted_weak_csssp");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("weighted_weak_csssp: epsilon must lie in (0,1)");

    const int n = g.node_count();
    const double surcharge = epsilon * g.max_weight() / static_cast<double>(gray_budget);

    PathTree tree;
    tree.source = source;
    tree.parent_edge.assign(n, -1);
    tree.punished_dist.assign(n, kInf);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    tree.punished_dist[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != tree.punished_dist[u]) continue;
        for (const Adj& a : g.neighbors(u)) {
            const double nd = d + g.edge(a.edge).w + (gray.test(a.edge) ? surcharge : 0.0);
            if (nd < tree.punished_dist[a.to]) {
                tree.punished_dist[a.to] = nd;
                tree.parent_edge[a.to] = a.edge;
                pq.emplace(nd, a.to);
            }
        }
    }

    fill_path_stats(g, gray, tree.punished_dist, kInf, tree);
    return tree;
}

} // namespace addspan
