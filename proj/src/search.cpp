#include "addspan/search.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace addspan {

namespace {

void check_source(const Graph& g, int source, const char* who) {
    if (source < 0 || source >= g.node_count())
        throw std::out_of_range(std::string(who) + ": source node out of range");
}

} // namespace

BfsTree bfs_tree(const Graph& g, int source) {
    check_source(g, source, "bfs_tree");
    const int n = g.node_count();
    BfsTree t;
    t.source = source;
    t.dist.assign(n, -1);
    t.parent.assign(n, -1);
    t.parent_edge.assign(n, -1);

    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(source);
    t.dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (const Adj& a : g.neighbors(u)) {
            if (t.dist[a.to] < 0) {
                t.dist[a.to] = t.dist[u] + 1;
                t.parent[a.to] = u;
                t.parent_edge[a.to] = a.edge;
                queue.push_back(a.to);
            }
        }
    }
    return t;
}

BfsTree canonical_bfs(const Graph& g, int source) {
    BfsTree t = bfs_tree(g, source);
    // Second pass: re-point each node at its lowest-id previous-level
    // neighbor. Adjacency is sorted, so the first match wins.
    for (int v = 0; v < g.node_count(); ++v) {
        if (v == source || t.dist[v] < 0) continue;
        for (const Adj& a : g.neighbors(v)) {
            if (t.dist[a.to] == t.dist[v] - 1) {
                t.parent[v] = a.to;
                t.parent_edge[v] = a.edge;
                break;
            }
        }
    }
    return t;
}

std::vector<int> path_nodes(const BfsTree& tree, int target) {
    if (tree.dist[target] < 0) return {};
    std::vector<int> nodes;
    for (int v = target; v != -1; v = tree.parent[v]) nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

DijkstraTree dijkstra(const Graph& g, int source) {
    check_source(g, source, "dijkstra");
    const int n = g.node_count();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    DijkstraTree t;
    t.source = source;
    t.dist.assign(n, kInf);
    t.parent_edge.assign(n, -1);

    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    t.dist[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d != t.dist[u]) continue;
        for (const Adj& a : g.neighbors(u)) {
            const double nd = d + g.edge(a.edge).w;
            if (nd < t.dist[a.to]) {
                t.dist[a.to] = nd;
                t.parent_edge[a.to] = a.edge;
                pq.emplace(nd, a.to);
            }
        }
    }
    return t;
}

std::vector<int> path_nodes(const Graph& g, const DijkstraTree& tree, int target) {
    if (tree.dist[target] == std::numeric_limits<double>::infinity()) return {};
    std::vector<int> nodes;
    int v = target;
    nodes.push_back(v);
    while (tree.parent_edge[v] != -1) {
        const Edge& e = g.edge(tree.parent_edge[v]);
        v = (e.u == v) ? e.v : e.u;
        nodes.push_back(v);
    }
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

} // namespace addspan
