#include "twinedge/coloring.hpp"

#include <algorithm>

#include "twinedge/errors.hpp"

namespace twinedge {

VertexColoring induced_coloring(const Graph& g, const ZkEdgeColoring& s) {
    if (s.m < 1) throw PreconditionError("modulus must be at least 1");
    if (static_cast<int>(s.values.size()) != g.edge_count())
        throw PreconditionError("edge coloring domain does not match the graph");
    for (int x : s.values)
        if (x < 0 || x >= s.m) throw PreconditionError("edge color out of range");
    VertexColoring c;
    c.k = s.m;
    c.colors.assign(g.n, 0);
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edges[id];
        c.colors[u] = (c.colors[u] + s.values[id]) % s.m;
        c.colors[v] = (c.colors[v] + s.values[id]) % s.m;
    }
    return c;
}

bool is_proper(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.n)
        throw PreconditionError("vertex coloring domain does not match the graph");
    for (auto [u, v] : g.edges)
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

TwinVerdict verify_twin(const Graph& g, const ZkEdgeColoring& s) {
    if (auto comp = find_order2_component(g))
        throw NotNiceError("graph has a component of order 2");
    VertexColoring c = induced_coloring(g, s);
    for (auto [u, v] : g.edges)
        if (c.colors[u] == c.colors[v]) return {false, {u, v}};
    return {true, {-1, -1}};
}

ColoringType class_sizes(const VertexColoring& c) {
    ColoringType t;
    t.sizes.assign(std::max(c.k, 0), 0);
    for (int col : c.colors) {
        if (col < 0 || col >= c.k) throw PreconditionError("vertex color out of range");
        ++t.sizes[col];
    }
    std::sort(t.sizes.begin(), t.sizes.end());
    return t;
}

ColoringType class_sizes_in(const VertexColoring& c, const std::vector<int>& vertices) {
    ColoringType t;
    t.sizes.assign(std::max(c.k, 0), 0);
    for (int v : vertices) {
        int col = c.colors.at(v);
        if (col < 0 || col >= c.k) throw PreconditionError("vertex color out of range");
        ++t.sizes[col];
    }
    std::sort(t.sizes.begin(), t.sizes.end());
    return t;
}

}  // namespace twinedge
