// search.hpp - Deterministic BFS / Dijkstra trees and canonical paths.

#ifndef ADDSPAN_SEARCH_HPP
#define ADDSPAN_SEARCH_HPP

#include <vector>

#include "addspan/graph.hpp"

namespace addspan {

struct BfsTree {
    int source = 0;
    std::vector<int> dist;        // hop count, -1 if unreachable
    std::vector<int> parent;      // predecessor node, -1 for source/unreachable
    std::vector<int> parent_edge; // id of the parent edge, -1 likewise
};

// Plain BFS; deterministic because adjacency is sorted and the queue order
// is fixed. Parents are first-discoverer parents.
BfsTree bfs_tree(const Graph& g, int source);

// Canonical BFS tree: every node's parent is its lowest-id neighbor on the
// previous level, so the parent walk yields one canonical shortest path per
// (source, target) pair.
BfsTree canonical_bfs(const Graph& g, int source);

// Nodes of the canonical source..target path; empty if unreachable.
std::vector<int> path_nodes(const BfsTree& tree, int target);

struct DijkstraTree {
    int source = 0;
    std::vector<double> dist;     // +inf if unreachable
    std::vector<int> parent_edge; // -1 for source/unreachable
};

// Dijkstra over the stored weights. Ties in the priority queue resolve by
// (distance, node id); parents update only on strict improvement.
DijkstraTree dijkstra(const Graph& g, int source);

std::vector<int> path_nodes(const Graph& g, const DijkstraTree& tree, int target);

} // namespace addspan

#endif
