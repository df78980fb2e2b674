#include "twinedge/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "twinedge/errors.hpp"

namespace twinedge {

namespace {

int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------
// Canonical partition enumeration (restricted growth strings over a fixed
// processing order), used for the chromatic number, the optimal-coloring
// listing and everything derived from it. Capped at 64 vertices so that
// adjacency fits in one word per vertex.

struct PartitionSearch {
    int n = 0;
    int kcap = 0;
    std::vector<int> order;             // position -> vertex (degree desc, index asc)
    std::vector<uint64_t> adjmask;      // by position
    std::vector<uint64_t> class_mask;
    std::vector<std::vector<int>> classes;  // original vertex ids
    long long budget = 0;
    const std::function<bool(const std::vector<std::vector<int>>&)>* emit = nullptr;
    bool stopped = false;

    void init(const Graph& g, int cap, long long node_budget) {
        n = g.n;
        kcap = cap;
        budget = node_budget;
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        std::vector<int> pos(n);
        for (int p = 0; p < n; ++p) pos[order[p]] = p;
        adjmask.assign(n, 0);
        for (auto [u, v] : g.edges) {
            adjmask[pos[u]] |= uint64_t{1} << pos[v];
            adjmask[pos[v]] |= uint64_t{1} << pos[u];
        }
        class_mask.assign(kcap, 0);
        classes.assign(kcap, {});
    }

    void run(int p, int used) {
        if (stopped) return;
        if (--budget <= 0)
            throw SizeLimitError("coloring enumeration exceeded the node budget");
        if (p == n) {
            auto canon = std::vector<std::vector<int>>(classes.begin(),
                                                       classes.begin() + used);
            for (auto& cls : canon) std::sort(cls.begin(), cls.end());
            std::sort(canon.begin(), canon.end());
            if (!(*emit)(canon)) stopped = true;
            return;
        }
        uint64_t bit = uint64_t{1} << p;
        int tries = std::min(used + 1, kcap);
        for (int c = 0; c < tries && !stopped; ++c) {
            if (adjmask[p] & class_mask[c]) continue;
            class_mask[c] |= bit;
            classes[c].push_back(order[p]);
            run(p + 1, std::max(used, c + 1));
            classes[c].pop_back();
            class_mask[c] &= ~bit;
        }
    }
};

void check_vertex_limit(const Graph& g, const OracleLimits& lim) {
    if (g.n > lim.max_vertices || g.n > 64)
        throw SizeLimitError("graph exceeds the configured vertex limit");
}

bool colorable_with(const Graph& g, int k, const OracleLimits& lim) {
    if (k >= g.n) return true;
    PartitionSearch ps;
    ps.init(g, k, lim.node_budget);
    bool found = false;
    std::function<bool(const std::vector<std::vector<int>>&)> cb =
        [&](const std::vector<std::vector<int>>&) {
            found = true;
            return false;
        };
    ps.emit = &cb;
    ps.run(0, 0);
    return found;
}

int greedy_clique_size(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

int chromatic_number(const Graph& g, const OracleLimits& lim) {
    if (g.n == 0) return 0;
    check_vertex_limit(g, lim);
    if (g.edge_count() == 0) return 1;
    for (int k = greedy_clique_size(g); k <= g.n; ++k)
        if (colorable_with(g, k, lim)) return k;
    return g.n;
}

void for_each_optimal_partition(
    const Graph& g, const OracleLimits& lim,
    const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
    check_vertex_limit(g, lim);
    if (g.n == 0) return;
    int k = chromatic_number(g, lim);
    PartitionSearch ps;
    ps.init(g, k, lim.node_budget);
    std::function<bool(const std::vector<std::vector<int>>&)> cb =
        [&](const std::vector<std::vector<int>>& classes) {
            assert(static_cast<int>(classes.size()) == k);
            return visit(classes);
        };
    ps.emit = &cb;
    ps.run(0, 0);
}

OptimalColoringEnumeration enumerate_optimal_partitions(const Graph& g,
                                                        const OracleLimits& lim) {
    OptimalColoringEnumeration out;
    out.k = chromatic_number(g, lim);
    for_each_optimal_partition(g, lim, [&](const auto& classes) {
        out.partitions.push_back(classes);
        return true;
    });
    return out;
}

bool all_odd_all_optimal(const Graph& g, const OracleLimits& lim) {
    bool all_odd = true;
    for_each_optimal_partition(g, lim, [&](const auto& classes) {
        for (const auto& cls : classes)
            if (cls.size() % 2 == 0) {
                all_odd = false;
                return false;
            }
        return true;
    });
    return all_odd;
}

// ---------------------------------------------------------------------
// Twin coloring existence.

namespace {

// Exhaustive search over edge colors of one component. Edges are ordered
// so vertices close in index finish early; a vertex whose last incident
// edge gets a value is immediately checked against all other determined
// vertices in its neighborhood.
struct ComponentOdometer {
    const Graph& g;
    int m;
    std::vector<int> edge_ids;
    std::vector<int> partial;
    std::vector<int> remaining;
    long long& budget;

    ComponentOdometer(const Graph& graph, const std::vector<int>& comp, int modulus,
                      long long& node_budget)
        : g(graph), m(modulus), partial(graph.n, 0), remaining(graph.n, 0),
          budget(node_budget) {
        for (int u : comp)
            for (auto [w, id] : g.adj[u])
                if (u < w) edge_ids.push_back(id);
        std::sort(edge_ids.begin(), edge_ids.end(), [&](int a, int b) {
            auto ka = std::make_pair(g.edges[a].second, g.edges[a].first);
            auto kb = std::make_pair(g.edges[b].second, g.edges[b].first);
            return ka < kb;
        });
        for (int id : edge_ids) {
            ++remaining[g.edges[id].first];
            ++remaining[g.edges[id].second];
        }
    }

    bool conflicts_when_final(int v) const {
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            if (remaining[w] == 0 && partial[w] == partial[v]) return true;
        }
        return false;
    }

    bool search(size_t idx) {
        if (idx == edge_ids.size()) return true;
        auto [u, v] = g.edges[edge_ids[idx]];
        for (int val = 0; val < m; ++val) {
            if (--budget <= 0)
                throw SizeLimitError("twin coloring search exceeded the node budget");
            partial[u] = mod(partial[u] + val, m);
            partial[v] = mod(partial[v] + val, m);
            --remaining[u];
            --remaining[v];
            bool ok = !(remaining[u] == 0 && conflicts_when_final(u)) &&
                      !(remaining[v] == 0 && conflicts_when_final(v));
            if (ok && search(idx + 1)) return true;
            ++remaining[u];
            ++remaining[v];
            partial[u] = mod(partial[u] - val, m);
            partial[v] = mod(partial[v] - val, m);
        }
        return false;
    }
};

// Realizability of one target coloring f on a component reduces to a
// linear congruence: fix a spanning tree; for any values on the non-tree
// edges the tree edges are forced bottom-up by the non-root constraints,
// and only the root residual remains. The residual is linear in f and in
// the non-tree values, so f is realizable iff gcd(m, non-tree
// coefficients) divides the f-part of the residual.
struct ComponentRealizer {
    const Graph& g;
    int m;
    SpanningTree tree;
    std::vector<char> in_tree;
    std::vector<int> lambda;  // residual coefficient per component vertex
    int gcd_coeff;            // gcd of m and all non-tree coefficients

    ComponentRealizer(const Graph& graph, const std::vector<int>& comp, int modulus)
        : g(graph), m(modulus), tree(bfs_spanning_tree(graph, comp.front())),
          in_tree(graph.edge_count(), 0), lambda(graph.n, 0), gcd_coeff(modulus) {
        for (int id : tree.tree_edges) in_tree[id] = 1;
        std::vector<int> svals(g.edge_count(), 0);
        auto residual = [&](const std::vector<int>& probe_f) {
            for (size_t i = tree.order.size(); i-- > 1;) {
                int u = tree.order[i];
                int pe = tree.parent_edge[u];
                long long others = 0;
                for (auto [w, id] : g.adj[u]) {
                    (void)w;
                    if (id != pe) others += svals[id];
                }
                svals[pe] = mod(probe_f[u] - others, m);
            }
            long long at_root = 0;
            for (auto [w, id] : g.adj[tree.root]) {
                (void)w;
                at_root += svals[id];
            }
            return mod(at_root - probe_f[tree.root], m);
        };

        std::vector<int> probe(g.n, 0);
        for (int v : comp) {
            probe[v] = 1;
            lambda[v] = residual(probe);
            probe[v] = 0;
        }
        for (int u : comp) {
            for (auto [w, id] : g.adj[u]) {
                if (u >= w || in_tree[id]) continue;
                svals[id] = 1;
                gcd_coeff = std::gcd(gcd_coeff, residual(probe));
                svals[id] = 0;
            }
        }
        if (gcd_coeff == 0) gcd_coeff = m;
    }

    bool realizable_offset(int alpha) const { return alpha % gcd_coeff == 0; }
};

// Backtracking over proper colorings of the component in tree order,
// carrying the residual offset; succeeds on the first realizable one.
struct ColoringSearch {
    const Graph& g;
    int m;
    const ComponentRealizer& real;
    const std::vector<int>& order;  // BFS order: every vertex after its parent
    std::vector<int> color;
    std::vector<std::vector<int>> earlier;  // neighbors appearing before, per position
    long long& budget;

    ColoringSearch(const Graph& graph, int modulus, const ComponentRealizer& r,
                   long long& node_budget)
        : g(graph), m(modulus), real(r), order(r.tree.order), color(graph.n, -1),
          budget(node_budget) {
        std::vector<int> pos(g.n, -1);
        for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        earlier.resize(order.size());
        for (size_t i = 0; i < order.size(); ++i)
            for (auto [w, id] : g.adj[order[i]]) {
                (void)id;
                if (pos[w] >= 0 && pos[w] < static_cast<int>(i))
                    earlier[i].push_back(w);
            }
    }

    bool search(size_t i, int alpha) {
        if (i == order.size()) return real.realizable_offset(alpha);
        int v = order[i];
        for (int c = 0; c < m; ++c) {
            if (--budget <= 0)
                throw SizeLimitError("twin coloring search exceeded the node budget");
            bool ok = true;
            for (int w : earlier[i])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (search(i + 1, mod(alpha + static_cast<long long>(real.lambda[v]) * c, m)))
                return true;
            color[v] = -1;
        }
        return false;
    }
};

bool component_twin_odometer(const Graph& g, const std::vector<int>& comp, int m,
                             long long& budget) {
    ComponentOdometer od(g, comp, m, budget);
    return od.search(0);
}

bool component_twin_algebraic(const Graph& g, const std::vector<int>& comp, int m,
                              long long& budget) {
    ComponentRealizer real(g, comp, m);
    ColoringSearch cs(g, m, real, budget);
    return cs.search(0, 0);
}

bool component_twin_exists(const Graph& g, const std::vector<int>& comp, int m,
                           long long& budget) {
    long long ec = 0;
    for (int u : comp)
        for (auto [w, id] : g.adj[u]) {
            (void)id;
            if (u < w) ++ec;
        }
    double est_odo = std::pow(static_cast<double>(m), static_cast<double>(ec));
    double est_alg = comp.size() <= 1
                         ? 1.0
                         : m * std::pow(static_cast<double>(m - 1),
                                        static_cast<double>(comp.size() - 1));
    double left = static_cast<double>(budget);
    if (est_odo <= 1e5) return component_twin_odometer(g, comp, m, budget);
    if (est_alg <= est_odo) {
        if (est_alg <= left) return component_twin_algebraic(g, comp, m, budget);
        if (est_odo <= left) return component_twin_odometer(g, comp, m, budget);
    } else {
        if (est_odo <= left) return component_twin_odometer(g, comp, m, budget);
        if (est_alg <= left) return component_twin_algebraic(g, comp, m, budget);
    }
    throw SizeLimitError("twin coloring search is too large for the node budget");
}

}  // namespace

bool exists_twin_coloring(const Graph& g, int m, const OracleLimits& lim) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    long long budget = lim.node_budget;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        if (!component_twin_exists(g, comp, m, budget)) return false;
    }
    return true;
}

bool exists_twin_coloring_odometer(const Graph& g, int m, long long node_budget) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    long long budget = node_budget;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        if (!component_twin_odometer(g, comp, m, budget)) return false;
    }
    return true;
}

bool exists_twin_coloring_algebraic(const Graph& g, int m, long long node_budget) {
    if (m < 2) throw PreconditionError("modulus must be at least 2");
    long long budget = node_budget;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        if (!component_twin_algebraic(g, comp, m, budget)) return false;
    }
    return true;
}

int chi_it_bruteforce(const Graph& g, const OracleLimits& lim) {
    if (!is_nice(g)) throw NotNiceError("graph has a component of order 2");
    int chi = chromatic_number(g, lim);
    double bits = g.edge_count() * std::log2(static_cast<double>(chi) + 1.0);
    if (bits > lim.max_bits)
        throw SizeLimitError("twin coloring search space exceeds the bit limit");
    int upper = std::max(chi + 1, 2);
    for (int m = 2; m <= upper; ++m)
        if (exists_twin_coloring(g, m, lim)) return m;
    throw std::logic_error("no twin coloring found within chi+1 colors");
}

int chi_it_predict(const Graph& g, const OracleLimits& lim) {
    if (!is_nice(g)) throw NotNiceError("graph has a component of order 2");
    if (g.edge_count() == 0) return 2;
    int chi = chromatic_number(g, lim);
    if (chi % 4 != 2) return chi;

    std::vector<int> comp_of(g.n, -1);
    auto comps = connected_components(g);
    for (size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);

    bool every_partition_pins = true;
    std::vector<int> cnt(comps.size() * chi);
    for_each_optimal_partition(g, lim, [&](const auto& classes) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) ++cnt[comp_of[v] * chi + c];
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            bool all_odd = true;
            for (int c = 0; c < chi; ++c)
                if (cnt[ci * chi + c] % 2 == 0) {
                    all_odd = false;
                    break;
                }
            if (all_odd) return true;  // this partition cannot be beaten
        }
        every_partition_pins = false;
        return false;
    });
    return every_partition_pins ? chi + 1 : chi;
}

}  // namespace twinedge
