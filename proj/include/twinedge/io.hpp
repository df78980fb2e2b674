#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twinedge/coloring.hpp"
#include "twinedge/gadgets.hpp"
#include "twinedge/graph.hpp"

namespace twinedge {

// DIMACS graph format: header "p edge <n> <m>", edge lines "e <u> <v>"
// with 1-indexed vertices, comment lines starting with "c". Duplicate
// edges and self-loops are rejected.
Graph read_dimacs_graph(std::istream& in);
void write_dimacs_graph(std::ostream& out, const Graph& g);

// Vertex coloring file: header "k <K>", lines "v <vertex> <color>"
// (1-indexed vertices, 0-indexed colors); the map must be total.
VertexColoring read_vertex_coloring(std::istream& in, int n);
void write_vertex_coloring(std::ostream& out, const VertexColoring& c);

// Edge coloring file: header "m <M>", lines "s <u> <v> <color>"; must
// cover the graph's edge set exactly.
ZkEdgeColoring read_edge_coloring(std::istream& in, const Graph& g);
void write_edge_coloring(std::ostream& out, const Graph& g, const ZkEdgeColoring& s);

// Single line "o <v1> ... <vn>", 1-indexed, a permutation of the vertices.
std::vector<int> read_vertex_order(std::istream& in, int n);
void write_vertex_order(std::ostream& out, const std::vector<int>& order);

// DIMACS CNF, restricted to exactly three literals per clause.
CnfFormula read_dimacs_cnf(std::istream& in);

// Role annotation sidecar: lines "r <vertex> <role>".
void write_roles(std::ostream& out, const std::vector<std::string>& roles);

// Path convenience wrappers; all throw ParseError on unreadable files.
Graph load_graph(const std::string& path);
VertexColoring load_vertex_coloring(const std::string& path, int n);
ZkEdgeColoring load_edge_coloring(const std::string& path, const Graph& g);
std::vector<int> load_vertex_order(const std::string& path, int n);
CnfFormula load_cnf(const std::string& path);

}  // namespace twinedge
