// csssp.hpp - Weak constrained single-source shortest paths by edge punishing.
//
// Given a set of "gray" edges and a budget g, the weak CSSSP contract asks,
// for every target t, for a path with at most 5g gray edges that is no longer
// than any s~>t path with fewer than g gray edges -- whenever a g-short path
// (a shortest path with patched endpoints and <g gray edges) exists at all.
//
// Both solvers run a single Dijkstra over punished weights: each gray edge
// pays a surcharge of 1/g (unweighted) or eps*W/g (weighted). The surcharge
// is small enough that the total punishment on any <g-gray path stays below
// one hop (below eps*W), and big enough that a reported path cannot carry
// more than 5g (5g/eps) gray edges without contradicting the existence of a
// g-short alternative. This gives SSSP-time solutions, no label setting.

#ifndef ADDSPAN_CSSSP_HPP
#define ADDSPAN_CSSSP_HPP

#include <cstdint>
#include <vector>

#include "addspan/edge_bitset.hpp"
#include "addspan/graph.hpp"

namespace addspan {

// Single-source result tree. parent_edge chains are acyclic and terminate at
// the source; true_length holds hop count (unweighted) or weight sum.
struct PathTree {
    int source = 0;
    std::vector<int> parent_edge;          // -1 for source/unreachable
    std::vector<double> punished_dist;     // distance under punished weights
    std::vector<double> true_length;       // original length/weight of tree path
    std::vector<int> gray_count;           // gray edges on tree path

    // Unweighted solver only: punished distances scaled by g, kept in exact
    // integers so tie behavior and the g-optimality tests are deterministic.
    // Empty for the weighted solver.
    std::vector<std::uint64_t> punished_scaled;
    std::uint64_t scale = 1;

    bool reachable(int t) const { return t == source || parent_edge[t] >= 0; }

    // Edge ids / node ids of the tree path source..t. Throws if unreachable.
    std::vector<int> path_edges(const Graph& g, int t) const;
    std::vector<int> path_nodes(const Graph& g, int t) const;
};

// Unweighted weak CSSSP: Dijkstra over integer weights g (plain edge) and
// g+1 (gray edge). For every t with a g-short s~>t path, the tree path has
// <= 5g gray edges and is no longer than any s~>t path with < g gray edges.
PathTree weak_csssp(const Graph& g, int source, const GrayEdgeSet& gray, int gray_budget);

// Weighted variant with error: punished weight w(e) + eps*W/g on gray edges.
// Under the same existence condition the tree path has <= 5g/eps gray edges
// and weight < w(P) + eps*W for every s~>t path P with < g gray edges.
PathTree weighted_weak_csssp(const Graph& g, int source, const GrayEdgeSet& gray,
                             int gray_budget, double epsilon);

} // namespace addspan

#endif
