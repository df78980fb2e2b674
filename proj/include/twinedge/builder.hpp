#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twinedge/coloring.hpp"
#include "twinedge/graph.hpp"

namespace twinedge {

// Edge coloring matching a target vertex coloring everywhere except
// possibly at one designated vertex.
struct AlmostInducedColoring {
    ZkEdgeColoring s;
    VertexColoring target;
    int defective = -1;
};

enum class Strategy {
    bip2,
    bip_t,
    odd_t,
    even_t_direct,
    even_t_rebalanced,
    promote_k_plus_1,
    isolated,
};

const char* strategy_name(Strategy s);

struct ComponentReport {
    int id = -1;
    Strategy strategy = Strategy::isolated;
};

struct BuildReport {
    int palette_used = 0;  // k or k+1
    std::vector<ComponentReport> per_component;
    VertexColoring induced;
};

struct BuildResult {
    ZkEdgeColoring s;
    BuildReport report;
};

// Color the tree edges leaves-to-root so that every vertex except the root
// receives exactly its target color; all non-tree edges get 0. Linear in
// the component size.
AlmostInducedColoring almost_induce_from_tree(const Graph& g,
                                              const VertexColoring& c,
                                              const SpanningTree& t, int m);

// Add +x, -x alternately along the walk's edge occurrences, starting with
// +x on the first edge out of the start vertex. All induced colors are
// unchanged except at the start vertex, which moves by 2x mod m.
ZkEdgeColoring shift_odd_walk(const Graph& g, const ZkEdgeColoring& s,
                              const OddClosedWalk& w, int x);

// Twin t-edge coloring of one bipartite component (order 1 or >= 3).
// For t = 2 one part must be even; otherwise throws PreconditionError
// ("needs 3 colors") and the caller promotes t. For t >= 3 a valid
// coloring always exists; its induced coloring has at most 3 vertices
// with a color above 1.
ZkEdgeColoring build_bipartite_component(const Graph& g,
                                         const ComponentBipartition& cb, int t);

// Twin t-edge coloring of a non-bipartite component inducing f exactly,
// for odd t >= 3 (always possible) ...
ZkEdgeColoring build_component_odd_t(const Graph& g, const std::vector<int>& comp,
                                     const VertexColoring& f, int t);

// ... and for even t, which requires the component's color sum to be even;
// throws PreconditionError ("odd sum") otherwise.
ZkEdgeColoring build_component_even_t(const Graph& g, const std::vector<int>& comp,
                                      const VertexColoring& f, int t);

// Permute the color labels inside one component so the component's color
// sum becomes even, when some permutation achieves that. Returns nothing
// exactly when all k classes of the component have odd size and the label
// sum 0+1+...+(k-1) is odd (then every permutation keeps the sum odd).
std::optional<VertexColoring> rebalance_even_sum(const VertexColoring& f,
                                                 const std::vector<int>& comp,
                                                 int k);

// Top-level constructor: given a proper k-vertex coloring of a nice graph,
// builds a valid twin edge coloring with modulus k, or k+1 exactly when
// k = 2 (mod 4) and some component uses all k colors an odd number of
// times each. Runs in O(|V|+|E|).
BuildResult construct(const Graph& g, const VertexColoring& f, int k);

// Twin t-edge coloring for any t >= k from a proper k-coloring. For t = k
// this delegates to construct (whose modulus may be k+1, reported in the
// result); for t > k the returned modulus is exactly t.
BuildResult monotone_extend(const Graph& g, const VertexColoring& f, int k, int t);

}  // namespace twinedge
