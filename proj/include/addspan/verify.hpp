// verify.hpp - Exact desk-scale verification of stretch, size and structure.

#ifndef ADDSPAN_VERIFY_HPP
#define ADDSPAN_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "addspan/edge_bitset.hpp"
#include "addspan/graph.hpp"
#include "addspan/spanner.hpp"

namespace addspan {

struct StretchReport {
    double max_surplus = 0.0; // max over pairs of dist_H - bound; meaningful iff pairs_checked > 0
    std::optional<std::pair<int, int>> worst_pair;
    long long violations = 0;
    long long pairs_checked = 0; // pairs unreachable in G are excluded
    std::string bound_kind;      // "+k" or "+4W(s,t)+epsW"
    std::vector<std::tuple<int, int, double>> violating_pairs; // first 100, (s,t,surplus)

    std::string to_json() const;
};

struct VerifyOptions {
    int apsp_cap = 5000;                       // all-pairs sweeps reject larger n...
    std::optional<long long> pair_sample;      // ...unless sampled-pairs mode is on
    std::uint64_t seed = 0;                    // seed for the pair sample
    bool canonical_w = false;                  // W(s,t) from the canonical path only
};

// BFS from every node in G and in H; checks dist_H <= dist_G + k.
StretchReport verify_additive_stretch(const Graph& g, const EdgeBitset& h, int k,
                                      const VerifyOptions& opts = {});

// Dijkstra sweeps; checks dist_H <= dist_G + 4*W(s,t) + eps*W. By default
// W(s,t) is the strictest reading: the minimum over all shortest s~>t paths
// of the maximum edge weight on the path (bottleneck DP on the shortest-path
// DAG). Comparisons allow an absolute tolerance of 1e-9 * W.
StretchReport verify_weighted_stretch(const Graph& g, const EdgeBitset& h, double epsilon,
                                      const VerifyOptions& opts = {});

// W(source, t) for every t: the bottleneck value described above, or, with
// canonical=true, the max edge on the tree path the verifier itself walks.
// +inf for unreachable t, 0 at the source.
std::vector<double> minimax_shortest_weights(const Graph& g, int source, bool canonical = false);

// Number of nodes of degree >= mu on the walk; positions count, so repeated
// nodes count each time. Rejects walks with non-adjacent consecutive nodes.
int heavy_dist(const Graph& g, const std::vector<int>& path, int mu);

struct LemmaCheckResult {
    bool pass = true;
    long long trials = 0;
    // witness: (v, s, t, neighbor count) for a node with > 3 path neighbors
    std::optional<std::tuple<int, int, int, int>> witness;
};

// Samples (s,t) pairs and checks that no node has more than three neighbors
// on the canonical BFS shortest path. Holds on every graph; a failure means
// the BFS path is not a shortest path.
LemmaCheckResult check_three_neighbors_lemma(const Graph& g, int trials, std::uint64_t seed);

struct SizeReport {
    long long edges = 0;
    double ratio_to_n_mu = 0.0;
    StageCounts stages;

    std::string to_json() const;
};

SizeReport size_report(const SpannerBuild& build, const Graph& g);

} // namespace addspan

#endif
