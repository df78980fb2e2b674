#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace twinedge {

// Simple undirected graph. Vertices are 0-indexed; every edge is stored
// once as a canonical (min,max) pair, and adjacency lists carry
// (neighbor, edge id) entries sorted by neighbor so that all traversals
// below are deterministic.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::pair<int, int>>> adj;

    Graph() = default;
    explicit Graph(int vertex_count) : n(vertex_count), adj(vertex_count) {}

    // Validates and canonicalizes; rejects self-loops and duplicate edges.
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    int edge_id(int u, int v) const;  // -1 when absent
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    Graph complement() const;
    // Subgraph induced by `keep` (ascending vertex list); vertices are
    // renumbered 0..keep.size()-1 in that order.
    Graph induced(const std::vector<int>& keep) const;
};

// BFS tree of one connected component. parent/parent_edge are -1 for the
// root and for vertices outside the component; `order` lists the
// component root-first so that every vertex appears after its parent.
struct SpanningTree {
    int root = -1;
    std::vector<int> parent;
    std::vector<int> parent_edge;
    std::vector<int> order;
    std::vector<int> tree_edges;
};

// Two-coloring of one component, or an odd-cycle witness when none exists.
// part_x holds the component's smallest vertex.
struct ComponentBipartition {
    std::vector<int> vertices;
    bool bipartite = true;
    std::vector<int> part_x;
    std::vector<int> part_y;
    std::vector<int> odd_cycle;  // vertex cycle, odd length, no repeated endpoint
};

// Closed walk of odd length at `start`, of the shape path + odd cycle +
// reversed path; every path edge occurs exactly twice.
struct OddClosedWalk {
    int start = -1;
    std::vector<int> vertices;  // length L+1, front()==back()==start
    std::vector<int> edge_ids;  // length L, odd
};

// Components as ascending vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// First connected component of order exactly 2, if any. A graph without
// one is "nice": the domain of twin edge colorings.
std::optional<std::vector<int>> find_order2_component(const Graph& g);
bool is_nice(const Graph& g);

std::vector<ComponentBipartition> bipartition(const Graph& g);

SpanningTree bfs_spanning_tree(const Graph& g, int root);

// Requires v's component to be non-bipartite; throws PreconditionError
// ("bipartite component") otherwise.
OddClosedWalk find_odd_closed_walk(const Graph& g, int v);

}  // namespace twinedge
