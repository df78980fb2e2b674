#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twinedge/graph.hpp"

namespace twinedge {

// Total map vertex -> {0..k-1}. Properness is a checkable property, not an
// invariant: several operations accept improper candidates on purpose.
struct VertexColoring {
    int k = 0;
    std::vector<int> colors;
};

// Edge coloring over Z_m, keyed by the graph's canonical edge ids. The
// color labels carry arithmetic meaning, so they are never permuted or
// canonicalized.
struct ZkEdgeColoring {
    int m = 0;
    std::vector<int> values;
};

// Class sizes of a k-vertex coloring in non-decreasing order; classes of
// size zero are kept (size zero is even).
struct ColoringType {
    std::vector<int> sizes;

    bool operator==(const ColoringType&) const = default;
    bool all_odd() const {
        for (int s : sizes)
            if (s % 2 == 0) return false;
        return true;
    }
};

// c_s(v) = sum of s over the edges at v, reduced mod m; isolated vertices
// get 0 (empty sum). The result's palette size is m.
VertexColoring induced_coloring(const Graph& g, const ZkEdgeColoring& s);

// True iff every edge is bichromatic.
bool is_proper(const Graph& g, const VertexColoring& c);

struct TwinVerdict {
    bool valid = false;
    std::pair<int, int> conflict = {-1, -1};  // one monochromatic edge when invalid
};

// Valid iff the induced vertex coloring is proper. Throws NotNiceError
// when the graph has a component of order 2.
TwinVerdict verify_twin(const Graph& g, const ZkEdgeColoring& s);

ColoringType class_sizes(const VertexColoring& c);

// Class sizes restricted to one vertex set (used per component).
ColoringType class_sizes_in(const VertexColoring& c, const std::vector<int>& vertices);

}  // namespace twinedge
