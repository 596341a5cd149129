// oracle.hpp - Exact reference solvers for constrained shortest paths.
//
// Brute-force implementations used to check the fast solvers. Testing scale
// only: the budgeted solver runs Dijkstra on the (node x gray-count) product
// graph, the existence check runs one lexicographic Dijkstra per patched
// endpoint. Keep these independent of csssp.cpp.

#ifndef ADDSPAN_ORACLE_HPP
#define ADDSPAN_ORACLE_HPP

#include <vector>

#include "addspan/edge_bitset.hpp"
#include "addspan/graph.hpp"

namespace addspan {

// For each t, the minimum weight of an s~>t path using at most `budget` gray
// edges; +inf if no such path. O(budget * m log n).
std::vector<double> oracle_budgeted_csssp(const Graph& g, int source, const GrayEdgeSet& gray,
                                          int budget);

// True iff a g-short s~>t path exists: some s' in {s} u N(s), t' in {t} u N(t)
// and a shortest s'~>t' path whose gray count, plus the gray connecting
// edges, stays below gray_budget. The minimum gray count among shortest
// paths comes from a lexicographic Dijkstra on (distance, gray count).
bool oracle_gshort_exists(const Graph& g, int s, int t, const GrayEdgeSet& gray, int gray_budget);

// Row version: answers oracle_gshort_exists(g, s, t, ...) for every t at the
// cost of deg(s)+1 Dijkstra runs instead of n*(deg(s)+1).
std::vector<char> oracle_gshort_targets(const Graph& g, int s, const GrayEdgeSet& gray,
                                        int gray_budget);

} // namespace addspan

#endif
