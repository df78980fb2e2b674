#include "twinedge/builder.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "twinedge/errors.hpp"

namespace twinedge {

namespace {

int mod(long long x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// Inverse of 2 mod odd t, via the extended Euclidean algorithm.
int half_inverse(int t) {
    int old_r = 2, r = t, old_s = 1, s = 0;
    while (r != 0) {
        int q = old_r / r;
        int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    assert(old_r == 1);  // gcd(2, t) = 1 for odd t
    return mod(old_s, t);
}

int induced_at(const Graph& g, const ZkEdgeColoring& s, int v) {
    long long sum = 0;
    for (auto [w, id] : g.adj[v]) {
        (void)w;
        sum += s.values[id];
    }
    return mod(sum, s.m);
}

std::vector<int> component_edge_ids(const Graph& g, const std::vector<int>& comp) {
    std::vector<int> ids;
    for (int u : comp)
        for (auto [w, id] : g.adj[u])
            if (u < w) ids.push_back(id);
    return ids;
}

long long color_sum_in(const VertexColoring& f, const std::vector<int>& comp) {
    long long sum = 0;
    for (int v : comp) sum += f.colors[v];
    return sum;
}

// Non-bipartite component: almost-induce f from a tree rooted at the
// component's smallest vertex, then cancel the root defect by pushing x
// along an odd closed walk, with 2x = f(root) - c_s(root) mod t.
ZkEdgeColoring induce_exactly(const Graph& g, const std::vector<int>& comp,
                              const VertexColoring& f, int t) {
    int root = comp.front();
    SpanningTree tree = bfs_spanning_tree(g, root);
    AlmostInducedColoring a = almost_induce_from_tree(g, f, tree, t);
    int have = induced_at(g, a.s, root);
    int want = f.colors[root];
    if (have == want) return a.s;
    int diff = mod(want - have, t);
    int x;
    if (t % 2 == 1) {
        x = mod(static_cast<long long>(diff) * half_inverse(t), t);
    } else {
        // diff inherits the parity of the true difference when t is even,
        // and an even component color sum forces that difference even
        if (diff % 2 != 0) throw std::logic_error("even-palette defect with odd difference");
        x = diff / 2;
    }
    OddClosedWalk walk = find_odd_closed_walk(g, root);
    return shift_odd_walk(g, a.s, walk, x);
}

}  // namespace

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::bip2: return "bip2";
        case Strategy::bip_t: return "bip_t";
        case Strategy::odd_t: return "odd_t";
        case Strategy::even_t_direct: return "even_t_direct";
        case Strategy::even_t_rebalanced: return "even_t_rebalanced";
        case Strategy::promote_k_plus_1: return "promote_k_plus_1";
        case Strategy::isolated: return "isolated";
    }
    return "?";
}

AlmostInducedColoring almost_induce_from_tree(const Graph& g,
                                              const VertexColoring& c,
                                              const SpanningTree& t, int m) {
    if (m < 1) throw PreconditionError("modulus must be at least 1");
    for (int v : t.order)
        if (c.colors.at(v) < 0 || c.colors[v] >= m)
            throw PreconditionError("target color outside the palette");
    AlmostInducedColoring out;
    out.s.m = m;
    out.s.values.assign(g.edge_count(), 0);
    out.target = c;
    out.defective = t.root;
    // Reverse BFS order: when u is processed its edge to the parent is the
    // only incident edge still undetermined.
    for (size_t i = t.order.size(); i-- > 1;) {
        int u = t.order[i];
        int pe = t.parent_edge[u];
        long long others = 0;
        for (auto [w, id] : g.adj[u]) {
            (void)w;
            if (id != pe) others += out.s.values[id];
        }
        out.s.values[pe] = mod(c.colors[u] - others, m);
    }
    return out;
}

ZkEdgeColoring shift_odd_walk(const Graph& g, const ZkEdgeColoring& s,
                              const OddClosedWalk& w, int x) {
    (void)g;
    ZkEdgeColoring out = s;
    for (size_t i = 0; i < w.edge_ids.size(); ++i) {
        int delta = (i % 2 == 0) ? x : -x;
        out.values[w.edge_ids[i]] = mod(out.values[w.edge_ids[i]] + delta, out.m);
    }
    return out;
}

ZkEdgeColoring build_bipartite_component(const Graph& g,
                                         const ComponentBipartition& cb, int t) {
    if (!cb.bipartite) throw PreconditionError("component is not bipartite");
    if (t < 2) throw PreconditionError("palette must have at least 2 colors");
    ZkEdgeColoring empty{t, std::vector<int>(g.edge_count(), 0)};
    if (cb.vertices.size() == 1) return empty;
    if (cb.vertices.size() == 2) throw NotNiceError("component of order 2");

    // 0/1 coloring by sides, 1 on the root's side.
    auto two_sided = [&](const std::vector<int>& one_side) {
        VertexColoring c;
        c.k = t;
        c.colors.assign(g.n, 0);
        for (int v : one_side) c.colors[v] = 1;
        return c;
    };

    if (t == 2) {
        const std::vector<int>* even_side = nullptr;
        if (cb.part_x.size() % 2 == 0) even_side = &cb.part_x;
        else if (cb.part_y.size() % 2 == 0) even_side = &cb.part_y;
        else throw PreconditionError("needs 3 colors");
        int root = even_side->front();
        SpanningTree tree = bfs_spanning_tree(g, root);
        AlmostInducedColoring a =
            almost_induce_from_tree(g, two_sided(*even_side), tree, 2);
        // The double-counting identity makes the root come out right.
        assert(induced_at(g, a.s, root) == a.target.colors[root]);
        return a.s;
    }

    // t >= 3: root of degree >= 2 (exists in a connected graph of order >= 3),
    // colored 1 together with its side. Any nonzero root sum is proper since
    // all of the root's neighbors are colored 0.
    int root = -1;
    for (int v : cb.vertices)
        if (g.degree(v) >= 2) {
            root = v;
            break;
        }
    assert(root >= 0);
    bool root_in_x =
        std::binary_search(cb.part_x.begin(), cb.part_x.end(), root);
    SpanningTree tree = bfs_spanning_tree(g, root);
    AlmostInducedColoring a = almost_induce_from_tree(
        g, two_sided(root_in_x ? cb.part_x : cb.part_y), tree, t);
    if (induced_at(g, a.s, root) == 0) {
        // Bump the two edges to the smallest children; the root lands on
        // 4 mod t (or 6 mod 4 = 2) and the children on 2 (or 3), none of
        // which collides with the 0/1 sides.
        int delta = (t == 4) ? 3 : 2;
        int bumped = 0;
        for (auto [w, id] : g.adj[root]) {
            (void)w;
            a.s.values[id] = mod(a.s.values[id] + delta, t);
            if (++bumped == 2) break;
        }
        assert(bumped == 2);
    }
    return a.s;
}

ZkEdgeColoring build_component_odd_t(const Graph& g, const std::vector<int>& comp,
                                     const VertexColoring& f, int t) {
    if (t < 3 || t % 2 == 0) throw PreconditionError("palette must be odd and >= 3");
    return induce_exactly(g, comp, f, t);
}

ZkEdgeColoring build_component_even_t(const Graph& g, const std::vector<int>& comp,
                                      const VertexColoring& f, int t) {
    if (t < 2 || t % 2 == 1) throw PreconditionError("palette must be even");
    if (color_sum_in(f, comp) % 2 != 0) throw PreconditionError("odd sum");
    return induce_exactly(g, comp, f, t);
}

std::optional<VertexColoring> rebalance_even_sum(const VertexColoring& f,
                                                 const std::vector<int>& comp,
                                                 int k) {
    if (color_sum_in(f, comp) % 2 == 0) return f;
    std::vector<long long> size(k, 0);
    for (int v : comp) ++size[f.colors[v]];
    // One label transposition changes the sum parity iff the two classes
    // have sizes of different parity and the labels differ in parity; such
    // a pair exists whenever the class sizes are not all of one parity.
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if ((size[a] + size[b]) % 2 == 1 && (a + b) % 2 == 1) {
                VertexColoring out = f;
                for (int v : comp) {
                    if (f.colors[v] == a) out.colors[v] = b;
                    else if (f.colors[v] == b) out.colors[v] = a;
                }
                return out;
            }
        }
    }
    return std::nullopt;
}

namespace {

void merge_component(ZkEdgeColoring& into, const ZkEdgeColoring& sub,
                     const Graph& g, const std::vector<int>& comp) {
    for (int id : component_edge_ids(g, comp)) into.values[id] = sub.values[id];
}

}  // namespace

BuildResult construct(const Graph& g, const VertexColoring& f, int k) {
    if (k < 1) throw PreconditionError("palette size must be positive");
    if (static_cast<int>(f.colors.size()) != g.n)
        throw PreconditionError("coloring domain does not match the graph");
    for (int c : f.colors)
        if (c < 0 || c >= k) throw ImproperInputError("vertex color outside palette");
    if (auto comp = find_order2_component(g))
        throw NotNiceError("graph has a component of order 2");
    if (!is_proper(g, f)) throw ImproperInputError("vertex coloring is not proper");
    if (g.edge_count() > 0 && k < 2)
        throw PreconditionError("a graph with edges needs at least 2 colors");

    auto parts = bipartition(g);

    // Palette promotion: k = 2 (mod 4) and some component where every one
    // of the k colors appears an odd number of times (an unused color has
    // even count 0 and exempts the component).
    std::vector<char> comp_all_odd(parts.size(), 0);
    bool promote = false;
    if (k % 4 == 2) {
        std::vector<long long> cnt(k);
        for (size_t ci = 0; ci < parts.size(); ++ci) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (int v : parts[ci].vertices) ++cnt[f.colors[v]];
            bool all_odd = true;
            for (int a = 0; a < k; ++a)
                if (cnt[a] % 2 == 0) {
                    all_odd = false;
                    break;
                }
            if (all_odd) {
                comp_all_odd[ci] = 1;
                promote = true;
            }
        }
    }
    int m = promote ? k + 1 : k;
    if (g.edge_count() == 0) m = std::max(m, 2);

    BuildResult out;
    out.s.m = m;
    out.s.values.assign(g.edge_count(), 0);
    for (size_t ci = 0; ci < parts.size(); ++ci) {
        const auto& cb = parts[ci];
        ComponentReport rep{static_cast<int>(ci), Strategy::isolated};
        if (cb.vertices.size() == 1) {
            out.report.per_component.push_back(rep);
            continue;
        }
        ZkEdgeColoring sub;
        if (cb.bipartite) {
            sub = build_bipartite_component(g, cb, m);
            rep.strategy = (m == 2) ? Strategy::bip2 : Strategy::bip_t;
        } else if (m % 2 == 1) {
            sub = build_component_odd_t(g, cb.vertices, f, m);
            rep.strategy = comp_all_odd[ci] ? Strategy::promote_k_plus_1 : Strategy::odd_t;
        } else {
            if (color_sum_in(f, cb.vertices) % 2 == 0) {
                sub = build_component_even_t(g, cb.vertices, f, m);
                rep.strategy = Strategy::even_t_direct;
            } else {
                auto f2 = rebalance_even_sum(f, cb.vertices, k);
                if (!f2) throw std::logic_error("rebalance failed on a non-promoted component");
                sub = build_component_even_t(g, cb.vertices, *f2, m);
                rep.strategy = Strategy::even_t_rebalanced;
            }
        }
        merge_component(out.s, sub, g, cb.vertices);
        out.report.per_component.push_back(rep);
    }

    out.report.palette_used = m;
    out.report.induced = induced_coloring(g, out.s);
    if (!is_proper(g, out.report.induced))
        throw std::logic_error("constructed coloring failed verification");
    return out;
}

BuildResult monotone_extend(const Graph& g, const VertexColoring& f, int k, int t) {
    if (t < k) throw PreconditionError("target palette smaller than the given one");
    if (t == k) return construct(g, f, k);
    if (static_cast<int>(f.colors.size()) != g.n)
        throw PreconditionError("coloring domain does not match the graph");
    for (int c : f.colors)
        if (c < 0 || c >= k) throw ImproperInputError("vertex color outside palette");
    if (auto comp = find_order2_component(g))
        throw NotNiceError("graph has a component of order 2");
    if (!is_proper(g, f)) throw ImproperInputError("vertex coloring is not proper");

    auto parts = bipartition(g);
    BuildResult out;
    out.s.m = t;
    out.s.values.assign(g.edge_count(), 0);
    for (size_t ci = 0; ci < parts.size(); ++ci) {
        const auto& cb = parts[ci];
        ComponentReport rep{static_cast<int>(ci), Strategy::isolated};
        if (cb.vertices.size() == 1) {
            out.report.per_component.push_back(rep);
            continue;
        }
        ZkEdgeColoring sub;
        if (cb.bipartite) {
            sub = build_bipartite_component(g, cb, t);  // t > k >= 2, so t >= 3
            rep.strategy = Strategy::bip_t;
        } else if (t % 2 == 1) {
            sub = build_component_odd_t(g, cb.vertices, f, t);
            rep.strategy = Strategy::odd_t;
        } else if (color_sum_in(f, cb.vertices) % 2 == 0) {
            sub = build_component_even_t(g, cb.vertices, f, t);
            rep.strategy = Strategy::even_t_direct;
        } else {
            // Recolor one vertex of the component's top color to the next
            // label; that label is unused in the component and t > k keeps
            // it inside the palette, so the coloring stays proper and the
            // sum becomes even.
            int top = -1;
            for (int v : cb.vertices) top = std::max(top, f.colors[v]);
            VertexColoring f2 = f;
            f2.k = std::max(f.k, top + 2);
            for (int v : cb.vertices)
                if (f.colors[v] == top) {
                    f2.colors[v] = top + 1;
                    break;
                }
            assert(top + 1 < t);
            sub = build_component_even_t(g, cb.vertices, f2, t);
            rep.strategy = Strategy::even_t_rebalanced;
        }
        merge_component(out.s, sub, g, cb.vertices);
        out.report.per_component.push_back(rep);
    }

    out.report.palette_used = t;
    out.report.induced = induced_coloring(g, out.s);
    if (!is_proper(g, out.report.induced))
        throw std::logic_error("extended coloring failed verification");
    return out;
}

}  // namespace twinedge
