#include "twinedge/graph.hpp"

#include <algorithm>
#include <cassert>

#include "twinedge/errors.hpp"

namespace twinedge {

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edge_list) {
    if (vertex_count < 0) throw PreconditionError("negative vertex count");
    Graph g(vertex_count);
    g.edges.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    {
        auto sorted = g.edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("duplicate edge");
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edges[id];
        g.adj[u].emplace_back(v, id);
        g.adj[v].emplace_back(u, id);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::edge_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return -1;
    const bool u_side = adj[u].size() <= adj[v].size();
    const auto& a = u_side ? adj[u] : adj[v];
    const int w = u_side ? v : u;
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(w, -1));
    if (it != a.end() && it->first == w) return it->second;
    return -1;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> ce;
    for (int u = 0; u < n; ++u) {
        size_t i = 0;
        for (int v = u + 1; v < n; ++v) {
            while (i < adj[u].size() && adj[u][i].first < v) ++i;
            if (i < adj[u].size() && adj[u][i].first == v) continue;
            ce.emplace_back(u, v);
        }
    }
    return from_edges(n, ce);
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> remap(n, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= n || remap[v] >= 0)
            throw PreconditionError("bad vertex list for induced subgraph");
        remap[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> sub;
    for (auto [u, v] : edges)
        if (remap[u] >= 0 && remap[v] >= 0) sub.emplace_back(remap[u], remap[v]);
    return from_edges(static_cast<int>(keep.size()), sub);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        queue.assign(1, s);
        seen[s] = 1;
        std::vector<int> comp;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            comp.push_back(u);
            for (auto [w, id] : g.adj[u]) {
                (void)id;
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::vector<int>> find_order2_component(const Graph& g) {
    for (auto& comp : connected_components(g))
        if (comp.size() == 2) return comp;
    return std::nullopt;
}

bool is_nice(const Graph& g) { return !find_order2_component(g).has_value(); }

SpanningTree bfs_spanning_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw PreconditionError("root out of range");
    SpanningTree t;
    t.root = root;
    t.parent.assign(g.n, -1);
    t.parent_edge.assign(g.n, -1);
    std::vector<char> seen(g.n, 0);
    seen[root] = 1;
    t.order.push_back(root);
    for (size_t head = 0; head < t.order.size(); ++head) {
        int u = t.order[head];
        for (auto [w, id] : g.adj[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            t.parent[w] = u;
            t.parent_edge[w] = id;
            t.tree_edges.push_back(id);
            t.order.push_back(w);
        }
    }
    return t;
}

namespace {

// BFS from `root` over its component; fills depth/parent and finds the
// first edge (in BFS scan order) joining two vertices at equal depth.
// Returns false when the component is bipartite.
bool bfs_layer_conflict(const Graph& g, int root, std::vector<int>& depth,
                        std::vector<int>& parent, std::vector<int>& order,
                        std::pair<int, int>& conflict) {
    order.clear();
    order.push_back(root);
    depth[root] = 0;
    parent[root] = -1;
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (auto [w, id] : g.adj[u]) {
            (void)id;
            if (depth[w] < 0) {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                order.push_back(w);
            }
        }
    }
    for (int u : order) {
        for (auto [w, id] : g.adj[u]) {
            (void)id;
            if (depth[w] == depth[u]) {
                conflict = {u, w};
                return true;
            }
        }
    }
    return false;
}

// Odd cycle through the BFS-lowest common ancestor of u and w, where
// (u,w) is an intra-layer edge. Returned as a vertex cycle starting at
// the ancestor, without repeating it at the end.
std::vector<int> layer_conflict_cycle(const std::vector<int>& parent, int u,
                                      int w) {
    std::vector<int> up_u{u}, up_w{w};
    int a = u, b = w;
    while (a != b) {
        a = parent[a];
        b = parent[b];
        up_u.push_back(a);
        up_w.push_back(b);
    }
    // up_u = [u .. lca], up_w = [w .. lca]
    std::vector<int> cycle(up_u.rbegin(), up_u.rend());  // lca .. u
    cycle.insert(cycle.end(), up_w.begin(), up_w.end() - 1);  // w .. child of lca
    return cycle;
}

}  // namespace

std::vector<ComponentBipartition> bipartition(const Graph& g) {
    std::vector<ComponentBipartition> result;
    std::vector<int> depth(g.n, -1), parent(g.n, -1), order;
    for (const auto& comp : connected_components(g)) {
        ComponentBipartition cb;
        cb.vertices = comp;
        std::pair<int, int> conflict;
        if (bfs_layer_conflict(g, comp.front(), depth, parent, order, conflict)) {
            cb.bipartite = false;
            cb.odd_cycle = layer_conflict_cycle(parent, conflict.first, conflict.second);
        } else {
            for (int v : comp)
                (depth[v] % 2 == 0 ? cb.part_x : cb.part_y).push_back(v);
        }
        result.push_back(std::move(cb));
    }
    return result;
}

OddClosedWalk find_odd_closed_walk(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw PreconditionError("vertex out of range");
    std::vector<int> depth(g.n, -1), parent(g.n, -1), order;
    std::pair<int, int> conflict;
    if (!bfs_layer_conflict(g, v, depth, parent, order, conflict))
        throw PreconditionError("bipartite component");
    std::vector<int> cycle =
        layer_conflict_cycle(parent, conflict.first, conflict.second);

    // Tree path from v down to the cycle's anchor vertex.
    std::vector<int> path;  // v .. anchor
    for (int a = cycle.front(); a != v; a = parent[a]) path.push_back(a);
    path.push_back(v);
    std::reverse(path.begin(), path.end());

    OddClosedWalk walk;
    walk.start = v;
    walk.vertices = path;                                             // v .. anchor
    walk.vertices.insert(walk.vertices.end(), cycle.begin() + 1, cycle.end());
    walk.vertices.push_back(cycle.front());                           // close cycle
    for (size_t i = path.size() - 1; i-- > 0;) walk.vertices.push_back(path[i]);

    for (size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        int id = g.edge_id(walk.vertices[i], walk.vertices[i + 1]);
        assert(id >= 0);
        walk.edge_ids.push_back(id);
    }
    assert(walk.edge_ids.size() % 2 == 1);
    assert(walk.vertices.front() == v && walk.vertices.back() == v);
    return walk;
}

}  // namespace twinedge
