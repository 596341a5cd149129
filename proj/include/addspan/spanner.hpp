// spanner.hpp - Additive spanner constructions.
//
// Three builders over a shared stage vocabulary:
//   chechik_baseline  +4 spanner via clusters and all-pairs BFS (desk scale)
//   fast_plus4        +4 spanner via weak CSSSP between S2 nodes
//   weighted_plus4    +4W(s,t)+epsW spanner via lightweight init and
//                     weighted weak CSSSP
// Every build records which stage attempted each edge so size experiments
// can attribute growth.

#ifndef ADDSPAN_SPANNER_HPP
#define ADDSPAN_SPANNER_HPP

#include <string>
#include <vector>

#include "addspan/csssp.hpp"
#include "addspan/edge_bitset.hpp"
#include "addspan/graph.hpp"

namespace addspan {

struct StageCounts {
    long long init = 0;          // light edges / lightweight initialization
    long long s1_trees = 0;      // BFS or shortest-path tree edges per S1 node
    long long coverage = 0;      // all incident edges of uncovered nodes
    long long cluster_links = 0; // one edge from a clustered node to its center
    long long csssp_paths = 0;   // edges on paths between S2 nodes

    long long sum() const { return init + s1_trees + coverage + cluster_links + csssp_paths; }
    bool operator==(const StageCounts&) const = default;
};

struct SpannerBuild {
    EdgeBitset spanner_edges;
    std::vector<int> s1;
    std::vector<int> s2;
    StageCounts stage_counts; // add attempts per stage; the bitset deduplicates
    Params params;
    GrayEdgeSet gray_frozen;  // gray set used by the constrained path stage

    bool operator==(const SpannerBuild&) const = default;
};

// Cluster structure used by the baseline: each S2 node is the center of the
// cluster holding itself plus the heavy neighbors assigned to it.
struct ClusterAssignment {
    std::vector<int> center;               // per node; -1 if unclustered
    std::vector<int> centers;              // the S2 nodes, sorted
    std::vector<std::vector<int>> members; // aligned with centers

    bool clustered(int v) const { return center[v] >= 0; }
};

// Nodes of degree >= mu, sorted.
std::vector<int> heavy_nodes(const Graph& g, int mu);

// Edges whose endpoints are BOTH heavy. (This is the reading the stretch
// argument needs; marking edges with merely one heavy endpoint would blow
// the gray budget of the patched shortest paths.)
GrayEdgeSet heavy_edge_set(const Graph& g, int mu);

// Union over nodes of each node's d lightest incident edges; weight ties
// break toward the lower edge id.
EdgeBitset lightweight_init(const Graph& g, int d);

// Assign each heavy node adjacent to S2 to its lowest-id S2 neighbor.
ClusterAssignment assign_clusters(const Graph& g, const std::vector<int>& s2, int mu);

// Baseline stage (iii) path search: for each cluster pair, the shortest
// candidate (x1,s) o pi(s,t) o (t,x2) whose canonical path carries at most
// mu^3/n heavy nodes. Adds the winner's edges into `out`; returns attempts.
long long add_cluster_pair_paths(const Graph& g, const ClusterAssignment& clusters, int mu,
                                 EdgeBitset& out);

// Stage 5 of the fast construction: weak CSSSP from every x1 in s2 with the
// given gray set and budget, adding the tree path to every other s2 node.
long long add_csssp_paths(const Graph& g, const std::vector<int>& s2, const GrayEdgeSet& gray,
                          int gray_budget, EdgeBitset& out);

// Weighted analogue using weighted_weak_csssp.
long long add_weighted_csssp_paths(const Graph& g, const std::vector<int>& s2,
                                   const GrayEdgeSet& gray, int gray_budget, double epsilon,
                                   EdgeBitset& out);

// Fast +4 spanner of an unweighted graph.
SpannerBuild fast_plus4(const Graph& g, const Params& params);

// Cluster-based +4 baseline. All-pairs BFS; rejects n above apsp_cap.
SpannerBuild chechik_baseline(const Graph& g, const Params& params, int apsp_cap = 5000);

// +4W(s,t)+epsW spanner of a weighted graph; params.epsilon in (0,1).
SpannerBuild weighted_plus4(const Graph& g, const Params& params);

// JSON stats sidecar: n, m, mu, g, epsilon (weighted only), seed, s1_size,
// s2_size, stage_counts, spanner_edges.
std::string build_stats_json(const SpannerBuild& build, const Graph& g);

} // namespace addspan

#endif
