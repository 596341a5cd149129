#include "addspan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "addspan/rng.hpp"

namespace addspan {

std::optional<int> Graph::find_edge(int u, int v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Adj& a, int node) { return a.to < node; });
    if (it != nbrs.end() && it->to == v) return it->edge;
    return std::nullopt;
}

Graph build_graph(int n, std::vector<Edge> edges, bool weighted) {
    if (n < 0) throw std::invalid_argument("build_graph: negative node count");
    Graph g;
    g.n_ = n;
    g.weighted_ = weighted;

    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::out_of_range("build_graph: node id out of range on edge (" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.u == e.v)
            throw std::invalid_argument("build_graph: self-loop at node " + std::to_string(e.u));
        if (!(e.w > 0.0))
            throw std::invalid_argument("build_graph: non-positive weight on edge (" +
                                        std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (!weighted && e.w != 1.0)
            throw std::invalid_argument("build_graph: unweighted graph with weight != 1");
    }

    // Parallel-edge detection over canonical (min,max) keys.
    std::vector<std::uint64_t> keys;
    keys.reserve(edges.size());
    for (const Edge& e : edges) {
        const std::uint64_t a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        const std::uint64_t b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        keys.push_back(a * static_cast<std::uint64_t>(n) + b);
    }
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        const int u = static_cast<int>(*dup / static_cast<std::uint64_t>(n));
        const int v = static_cast<int>(*dup % static_cast<std::uint64_t>(n));
        throw std::invalid_argument("build_graph: parallel edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    }

    g.max_weight_ = 1.0;
    for (const Edge& e : edges) g.max_weight_ = std::max(g.max_weight_, e.w);
    if (!weighted) g.max_weight_ = 1.0;

    // CSR adjacency, sorted by neighbor id within each node.
    const int m = static_cast<int>(edges.size());
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.adj_off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) g.adj_off_[v + 1] = g.adj_off_[v] + deg[v];
    g.adj_.resize(static_cast<std::size_t>(2) * m);
    std::vector<int> cursor(g.adj_off_.begin(), g.adj_off_.end() - 1);
    for (int e = 0; e < m; ++e) {
        g.adj_[cursor[edges[e].u]++] = {edges[e].v, e};
        g.adj_[cursor[edges[e].v]++] = {edges[e].u, e};
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.adj_.begin() + g.adj_off_[v], g.adj_.begin() + g.adj_off_[v + 1],
                  [](const Adj& a, const Adj& b) { return a.to < b.to; });
    }

    g.edges_ = std::move(edges);
    return g;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> full;
    full.reserve(edges.size());
    for (auto [u, v] : edges) full.push_back({u, v, 1.0});
    return build_graph(n, std::move(full), false);
}

Params default_params(int n) {
    if (n < 1) throw std::invalid_argument("default_params: n must be >= 1");
    const double log_part = (n == 1) ? 1.0 : std::log(static_cast<double>(n));
    const double mu_real = std::pow(static_cast<double>(n), 0.4) * std::pow(log_part, 0.2);
    Params p;
    p.mu = static_cast<int>(std::ceil(mu_real));
    if (p.mu < 1) p.mu = 1;
    const long long mu3 = static_cast<long long>(p.mu) * p.mu * p.mu;
    p.g = static_cast<int>((mu3 + n - 1) / n) + 2; // ceil(mu^3/n) + 2
    return p;
}

void validate_params(const Params& params, bool weighted) {
    if (params.mu < 1) throw std::invalid_argument("params: mu must be >= 1");
    if (params.g < 2) throw std::invalid_argument("params: g must be >= 2");
    if (weighted) {
        if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
            throw std::invalid_argument("params: epsilon must lie in (0,1)");
    } else if (params.epsilon != 0.0) {
        throw std::invalid_argument("params: epsilon is only valid for weighted constructions");
    }
}

namespace {

// Exactly m distinct unordered pairs over 0..n-1, returned in sorted order.
std::vector<std::pair<int, int>> sample_pairs(int n, long long m, Rng& rng) {
    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<std::pair<int, int>> picked;
    picked.reserve(static_cast<std::size_t>(m));

    if (max_pairs <= 4'000'000) {
        // Enumerate and partially shuffle; handles dense requests.
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(max_pairs));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (long long i = 0; i < m; ++i) {
            const long long j =
                i + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_pairs - i)));
            std::swap(pairs[i], pairs[j]);
        }
        picked.assign(pairs.begin(), pairs.begin() + m);
    } else {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(static_cast<std::size_t>(m * 2));
        while (static_cast<long long>(picked.size()) < m) {
            const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            const int a = std::min(u, v), b = std::max(u, v);
            const std::uint64_t key =
                static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) + b;
            if (seen.insert(key).second) picked.emplace_back(a, b);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

} // namespace

Graph random_graph(int n, long long m, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative node count");
    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_pairs)
        throw std::invalid_argument("random_graph: m exceeds n(n-1)/2 = " +
                                    std::to_string(max_pairs));
    Rng rng(seed ^ stream::kEdges);
    auto pairs = sample_pairs(n, m, rng);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 1.0});
    return build_graph(n, std::move(edges), false);
}

Graph random_graph(int n, long long m, std::uint64_t seed, WeightRange weights) {
    if (!(weights.lo > 0.0) || weights.hi < weights.lo)
        throw std::invalid_argument("random_graph: weight range must satisfy 0 < lo <= hi");
    const long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_pairs)
        throw std::invalid_argument("random_graph: m exceeds n(n-1)/2 = " +
                                    std::to_string(max_pairs));
    Rng rng(seed ^ stream::kEdges);
    auto pairs = sample_pairs(n, m, rng);
    // Weights are drawn in canonical edge order, after selection, so the
    // weight of an edge depends only on (seed, final edge set).
    Rng wrng(seed ^ stream::kWeights);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, wrng.uniform_real(weights.lo, weights.hi)});
    return build_graph(n, std::move(edges), true);
}

std::string format_double(double x) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error(what + ", line " + std::to_string(line_no));
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;

    long long n = -1, m = -1;
    std::vector<Edge> edges;
    bool weighted = false;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;

        std::istringstream fields(line);
        if (!saw_header) {
            if (!(fields >> n >> m) || n < 0 || m < 0) parse_fail(line_no, "malformed header");
            std::string rest;
            if (fields >> rest) parse_fail(line_no, "malformed header");
            saw_header = true;
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }

        long long u, v;
        if (!(fields >> u >> v)) parse_fail(line_no, "malformed edge line");
        double w = 1.0;
        const bool has_weight = static_cast<bool>(fields >> w);
        std::string rest;
        if (fields >> rest) parse_fail(line_no, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "node id out of range");

        if (edges.empty()) {
            weighted = has_weight;
        } else if (has_weight != weighted) {
            parse_fail(line_no, "mixed weighted and unweighted edge lines");
        }
        if (static_cast<long long>(edges.size()) == m) parse_fail(line_no, "more edges than declared");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }

    if (!saw_header) throw std::runtime_error("malformed header, line 1");
    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error("expected " + std::to_string(m) + " edges, got " +
                                 std::to_string(edges.size()));
    return build_graph(static_cast<int>(n), std::move(edges), weighted);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out;
    out += std::to_string(g.node_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        if (g.weighted()) {
            out += ' ';
            out += format_double(e.w);
        }
        out += '\n';
    }
    return out;
}

} // namespace addspan
