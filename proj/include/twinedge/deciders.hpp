#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twinedge/coloring.hpp"
#include "twinedge/graph.hpp"

namespace twinedge {

// All deciders answer the same question for their graph class: is every
// color class of odd size in every optimal vertex coloring?

// Graphs of maximum degree k-1. Requires a K_k component as the structural
// certificate that the chromatic number is k; throws PreconditionError
// otherwise (also when the degree bound fails). Yes iff the graph is a
// disjoint union of an odd number of k-cliques.
bool decide_bounded_degree(const Graph& g, int k);

// Clique + independent set decomposition with the clique maximum.
struct SplitDecomposition {
    std::vector<int> clique;
    std::vector<int> independent;
};

std::optional<SplitDecomposition> recognize_split(const Graph& g);

// Split graphs: yes iff every independent-set vertex has degree k-1 and
// every clique vertex's degree has the opposite parity to the vertex
// count. Throws PreconditionError when the graph is not split.
bool decide_split(const Graph& g);

struct ChordalAnalysis {
    std::vector<int> peo;                           // perfect elimination ordering
    std::vector<std::vector<int>> maximal_cliques;  // ascending vertex lists
    std::vector<int> max_independent_set;
};

struct ChordalCheck {
    std::optional<ChordalAnalysis> analysis;
    std::vector<int> hole;  // chordless cycle of length >= 4 when not chordal
    bool chordal() const { return analysis.has_value(); }
};

// Lex-BFS ordering tested for perfect elimination; maximal cliques and a
// maximum independent set read off the ordering.
ChordalCheck chordal_analysis(const Graph& g);

// Graphs whose complement is chordal. Enumerates maximal independent sets
// (maximal cliques of the complement) in two phases, testing whether the
// removal drops the chromatic number. Throws PreconditionError when the
// complement is not chordal.
bool decide_cochordal(const Graph& g);

// Umbrella-free order check: positions a < b < c with x_a x_b and x_b x_c
// non-edges force x_a x_c to be a non-edge. Returns the violating vertex
// triple if any.
std::optional<std::array<int, 3>> find_cocomp_violation(const Graph& g,
                                                        const std::vector<int>& order);
bool verify_cocomp_order(const Graph& g, const std::vector<int>& order);

// Dynamic program over the order's prefixes that lists every achievable
// type of a k-vertex coloring (k = chromatic number). Types containing an
// empty class are dropped at the final projection. Throws
// PreconditionError when the order is not umbrella-free, or when no type
// survives (k below the chromatic number).
std::vector<ColoringType> cocomp_coloring_types(const Graph& g,
                                                const std::vector<int>& order, int k);

bool decide_cocomp(const Graph& g, const std::vector<int>& order, int k);

// Every class a maximal independent set; equivalently all k colors appear
// in the closed neighborhood of every vertex.
bool is_complete_coloring(const Graph& g, const VertexColoring& c);

}  // namespace twinedge
