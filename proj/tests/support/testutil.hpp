#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twinedge/builder.hpp"
#include "twinedge/coloring.hpp"
#include "twinedge/graph.hpp"

namespace twinedge::test {

using Rng = std::mt19937;

// --- named fixtures ----------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph petersen();
// K4 and K2 joined by one edge: order 6, degree sequence 4,3,3,3,2,1.
Graph k4_k2_bridge();
Graph disjoint_union(const std::vector<Graph>& parts);

// --- random instances ---------------------------------------------------

Graph random_graph(int n, double p, Rng& rng);
// Random graph with no component of order 2 (resampled until nice).
Graph random_nice_graph(int max_n, double p, Rng& rng);
Graph random_connected_nonbipartite(int n, Rng& rng);
// Interval graph together with its left-endpoint order (a valid
// umbrella-free order).
std::pair<Graph, std::vector<int>> random_interval_graph(int n, Rng& rng);

// Greedy proper coloring on a random vertex order with randomly permuted
// labels; k is the number of colors used.
VertexColoring random_proper_coloring(const Graph& g, Rng& rng);

// --- independent small-scale oracles -------------------------------------

// Does the graph contain an odd closed walk? Decided by integer powers of
// the adjacency matrix (trace of an odd power).
bool has_odd_cycle_matrix(const Graph& g);

// Exhaustive check: does any edge coloring over Z_t induce exactly f?
bool exists_inducing_coloring(const Graph& g, const VertexColoring& f, int t);

// All maximal cliques by subset enumeration (n <= 20).
std::vector<std::vector<int>> brute_maximal_cliques(const Graph& g);
int brute_max_independent_set(const Graph& g);
bool brute_is_chordal(const Graph& g);

// Relabel the graph's vertices; perm[v] is the new name of v.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// --- exhaustive catalog ---------------------------------------------------

// All non-isomorphic connected graphs with the given order (order <= 7).
const std::vector<Graph>& connected_catalog(int order);
// Total number of non-isomorphic graphs of that order (catalog self-check).
int catalog_size_all(int order);

// Turn an oracle partition into a labeled coloring (class rank = label).
VertexColoring coloring_from_partition(int n,
                                       const std::vector<std::vector<int>>& classes);

}  // namespace twinedge::test
