#include "addspan/oracle.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace addspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Minimum-weight distances with, as tie-break, the minimum number of gray
// edges among minimum-weight paths.
struct LexDijkstraResult {
    std::vector<double> dist;
    std::vector<int> gray;
};

LexDijkstraResult lex_dijkstra(const Graph& g, int source, const GrayEdgeSet& gray) {
    const int n = g.node_count();
    LexDijkstraResult r;
    r.dist.assign(n, kInf);
    r.gray.assign(n, std::numeric_limits<int>::max());

    using Entry = std::tuple<double, int, int>; // (dist, gray, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    r.dist[source] = 0.0;
    r.gray[source] = 0;
    pq.emplace(0.0, 0, source);
    while (!pq.empty()) {
        const auto [d, c, u] = pq.top();
        pq.pop();
        if (d != r.dist[u] || c != r.gray[u]) continue;
        for (const Adj& a : g.neighbors(u)) {
            const double nd = d + g.edge(a.edge).w;
            const int nc = c + (gray.test(a.edge) ? 1 : 0);
            if (nd < r.dist[a.to] || (nd == r.dist[a.to] && nc < r.gray[a.to])) {
                r.dist[a.to] = nd;
                r.gray[a.to] = nc;
                pq.emplace(nd, nc, a.to);
            }
        }
    }
    return r;
}

} // namespace

std::vector<double> oracle_budgeted_csssp(const Graph& g, int source, const GrayEdgeSet& gray,
                                          int budget) {
    if (source < 0 || source >= g.node_count())
        throw std::out_of_range("oracle_budgeted_csssp: source node out of range");
    if (gray.size() != g.edge_count())
        throw std::invalid_argument("oracle_budgeted_csssp: gray set does not match graph");
    if (budget < 0) throw std::invalid_argument("oracle_budgeted_csssp: negative budget");

    const int n = g.node_count();
    const int layers = budget + 1;
    std::vector<double> dist(static_cast<std::size_t>(n) * layers, kInf);
    const auto at = [&](int v, int k) -> double& {
        return dist[static_cast<std::size_t>(v) * layers + k];
    };

    using Entry = std::tuple<double, int, int>; // (dist, node, gray used)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    at(source, 0) = 0.0;
    pq.emplace(0.0, source, 0);
    while (!pq.empty()) {
        const auto [d, u, k] = pq.top();
        pq.pop();
        if (d != at(u, k)) continue;
        for (const Adj& a : g.neighbors(u)) {
            const int nk = k + (gray.test(a.edge) ? 1 : 0);
            if (nk > budget) continue;
            const double nd = d + g.edge(a.edge).w;
            if (nd < at(a.to, nk)) {
                at(a.to, nk) = nd;
                pq.emplace(nd, a.to, nk);
            }
        }
    }

    std::vector<double> best(n, kInf);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < layers; ++k) best[v] = std::min(best[v], at(v, k));
    return best;
}

std::vector<char> oracle_gshort_targets(const Graph& g, int s, const GrayEdgeSet& gray,
                                        int gray_budget) {
    if (s < 0 || s >= g.node_count())
        throw std::out_of_range("oracle_gshort_targets: source node out of range");
    if (gray.size() != g.edge_count())
        throw std::invalid_argument("oracle_gshort_targets: gray set does not match graph");
    if (gray_budget < 1)
        throw std::invalid_argument("oracle_gshort_targets: gray budget must be >= 1");

    const int n = g.node_count();
    std::vector<char> exists(n, 0);

    // One lex Dijkstra per patched start s' in {s} u N(s); every target then
    // checks its own patched endpoints t' in {t} u N(t) against each run.
    std::vector<std::pair<int, int>> starts; // (s', gray cost of edge (s,s'))
    starts.emplace_back(s, 0);
    for (const Adj& a : g.neighbors(s)) starts.emplace_back(a.to, gray.test(a.edge) ? 1 : 0);

    for (const auto& [sp, extra_s] : starts) {
        const LexDijkstraResult r = lex_dijkstra(g, sp, gray);
        for (int t = 0; t < n; ++t) {
            if (exists[t]) continue;
            if (r.dist[t] < kInf && r.gray[t] + extra_s < gray_budget) {
                exists[t] = 1;
                continue;
            }
            for (const Adj& a : g.neighbors(t)) {
                const int tp = a.to;
                if (r.dist[tp] == kInf) continue;
                const int extra_t = gray.test(a.edge) ? 1 : 0;
                if (r.gray[tp] + extra_s + extra_t < gray_budget) {
                    exists[t] = 1;
                    break;
                }
            }
        }
    }
    return exists;
}

bool oracle_gshort_exists(const Graph& g, int s, int t, const GrayEdgeSet& gray, int gray_budget) {
    if (t < 0 || t >= g.node_count())
        throw std::out_of_range("oracle_gshort_exists: target node out of range");
    return oracle_gshort_targets(g, s, gray, gray_budget)[t] != 0;
}

} // namespace addspan
