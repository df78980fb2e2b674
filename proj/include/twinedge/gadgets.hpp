#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twinedge/coloring.hpp"
#include "twinedge/graph.hpp"

namespace twinedge {

// 3-CNF formula; literals are signed 1-based variable indices. A clause
// may repeat a variable.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

bool evaluate_cnf(const CnfFormula& f, const std::vector<char>& assignment);
bool cnf_satisfiable(const CnfFormula& f);  // exhaustive, tiny formulas only

// One clause gadget: five internal vertices a1..a5 wired to the three
// literal vertices and a polarity anchor X. x, y, z may coincide (a clause
// can repeat a literal); X must differ from all of them.
struct ClauseGadget {
    std::array<int, 5> a;
    std::vector<std::pair<int, int>> edges;
};

ClauseGadget clause_gadget(int x, int y, int z, int anchor, int first_fresh_id);

// Output of the 3-SAT reduction: the instance graph together with an
// embedded k-clique, a proper k-coloring witness, per-vertex roles and the
// preprocessing trace.
struct ReductionInstance {
    Graph graph;
    std::vector<int> clique;
    VertexColoring witness;
    std::vector<std::string> roles;
    CnfFormula source;
    int variables_added = 0;
    bool clauses_doubled = false;
};

// Build the graph whose optimal colorings all have odd classes iff the
// formula is unsatisfiable. Preprocessing pads the variable count to even
// and doubles the clauses when the all-true split is odd on either side.
// For k > 3 a (k-3)-clique joined to everything lifts the palette.
ReductionInstance sat_to_allodd_instance(const CnfFormula& f, int k);

// Degree-capping gadget: p copies of (k-1)-cliques chained through an
// independent set S of odd size, forcing S monochromatic.
struct HGadget {
    Graph graph;
    std::vector<std::vector<int>> cliques;
    std::vector<int> s_set;
};

HGadget build_h_gadget(int p, int ell, int k);

struct DegreeReduced {
    Graph graph;
    std::vector<std::string> roles;
    int rounds = 0;
};

// Replace max-degree vertices by H gadgets until the maximum degree is at
// most k + ceil(sqrt(k-2)).
DegreeReduced reduce_degree(const Graph& g, int k);

int degree_reduction_bound(int k);  // k + ceil(sqrt(k-2))

}  // namespace twinedge
