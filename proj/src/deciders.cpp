#include "twinedge/deciders.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <numeric>
#include <set>

#include "twinedge/errors.hpp"
#include "twinedge/oracle.hpp"

namespace twinedge {

// ---------------------------------------------------------------------
// Bounded degree.

bool decide_bounded_degree(const Graph& g, int k) {
    if (k < 2) throw PreconditionError("class parameter must be at least 2");
    if (g.max_degree() >= k)
        throw PreconditionError("maximum degree is not below the class parameter");
    auto comps = connected_components(g);
    auto is_k_clique = [&](const std::vector<int>& comp) {
        if (static_cast<int>(comp.size()) != k) return false;
        for (int v : comp)
            if (g.degree(v) != k - 1) return false;
        return true;
    };
    bool has_clique = false;
    for (const auto& comp : comps) has_clique |= is_k_clique(comp);
    if (!has_clique)
        throw PreconditionError("no k-clique component certifies the chromatic number");
    long long cliques = 0;
    for (const auto& comp : comps) {
        if (!is_k_clique(comp)) return false;
        ++cliques;
    }
    return cliques % 2 == 1;
}

// ---------------------------------------------------------------------
// Split graphs.

std::optional<SplitDecomposition> recognize_split(const Graph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    // Degree-sequence criterion: with d_1 >= ... >= d_n and
    // h = max{i : d_i >= i-1}, the graph is split iff
    // sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i.
    int h = 0;
    for (int i = 1; i <= g.n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) h = i;
    long long top = 0, rest = 0;
    for (int i = 0; i < g.n; ++i)
        (i < h ? top : rest) += g.degree(order[i]);
    if (top != static_cast<long long>(h) * (h - 1) + rest) return std::nullopt;

    SplitDecomposition dec;
    dec.clique.assign(order.begin(), order.begin() + h);
    dec.independent.assign(order.begin() + h, order.end());
    std::sort(dec.clique.begin(), dec.clique.end());
    std::sort(dec.independent.begin(), dec.independent.end());
    for (size_t i = 0; i < dec.clique.size(); ++i)
        for (size_t j = i + 1; j < dec.clique.size(); ++j)
            if (!g.has_edge(dec.clique[i], dec.clique[j]))
                throw std::logic_error("split decomposition is not a clique");
    for (size_t i = 0; i < dec.independent.size(); ++i)
        for (size_t j = i + 1; j < dec.independent.size(); ++j)
            if (g.has_edge(dec.independent[i], dec.independent[j]))
                throw std::logic_error("split decomposition is not independent");

    // Make the clique maximum: at most one independent vertex can see all
    // of it (two such vertices would be adjacent), so one pass suffices.
    for (size_t i = 0; i < dec.independent.size(); ++i) {
        int s = dec.independent[i];
        bool sees_all = true;
        for (int u : dec.clique)
            if (!g.has_edge(s, u)) {
                sees_all = false;
                break;
            }
        if (sees_all) {
            dec.independent.erase(dec.independent.begin() + i);
            dec.clique.insert(
                std::lower_bound(dec.clique.begin(), dec.clique.end(), s), s);
            break;
        }
    }
    return dec;
}

bool decide_split(const Graph& g) {
    auto dec = recognize_split(g);
    if (!dec) throw PreconditionError("graph is not split");
    int k = static_cast<int>(dec->clique.size());
    long long total = k + static_cast<long long>(dec->independent.size());
    if (dec->independent.empty()) return true;
    for (int s : dec->independent)
        if (g.degree(s) != k - 1) return false;
    for (int x : dec->clique)
        if (g.degree(x) % 2 == total % 2) return false;
    return true;
}

// ---------------------------------------------------------------------
// Chordal analysis.

namespace {

// Lexicographic BFS by partition refinement; deterministic (groups keep
// ascending vertex order, the earliest group goes first).
std::vector<int> lex_bfs_order(const Graph& g) {
    std::vector<int> out;
    std::list<std::vector<int>> groups;
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    if (!all.empty()) groups.push_back(all);
    std::vector<char> in_out(g.n, 0), is_nbr(g.n, 0);
    while (!groups.empty()) {
        int v = groups.front().front();
        groups.front().erase(groups.front().begin());
        if (groups.front().empty()) groups.pop_front();
        out.push_back(v);
        in_out[v] = 1;
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            is_nbr[w] = 1;
        }
        for (auto it = groups.begin(); it != groups.end(); ++it) {
            std::vector<int> hit, miss;
            for (int u : *it) (is_nbr[u] ? hit : miss).push_back(u);
            if (!hit.empty() && !miss.empty()) {
                *it = std::move(miss);
                it = groups.insert(it, std::move(hit));
                ++it;
            }
        }
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            is_nbr[w] = 0;
        }
    }
    return out;
}

// Chordless cycle through a failed elimination triple: v sees u and w,
// u and w non-adjacent. A shortest u-w path avoiding N[v] minus {u,w} is
// induced, and closing it through v adds no chord.
std::vector<int> hole_from_failure(const Graph& g, int v, int u, int w) {
    std::vector<char> blocked(g.n, 0);
    blocked[v] = 1;
    for (auto [x, id] : g.adj[v]) {
        (void)id;
        blocked[x] = 1;
    }
    blocked[u] = blocked[w] = 0;
    std::vector<int> parent(g.n, -2);
    std::vector<int> queue{u};
    parent[u] = -1;
    for (size_t head = 0; head < queue.size() && parent[w] == -2; ++head) {
        int a = queue[head];
        for (auto [b, id] : g.adj[a]) {
            (void)id;
            if (blocked[b] || parent[b] != -2) continue;
            parent[b] = a;
            queue.push_back(b);
        }
    }
    if (parent[w] == -2) return {};  // no path in the restricted graph
    std::vector<int> cycle{v};
    for (int a = w; a != -1; a = parent[a]) cycle.push_back(a);
    return cycle;  // v, w, ..., u; length >= 4 since uw is a non-edge
}

}  // namespace

ChordalCheck chordal_analysis(const Graph& g) {
    ChordalCheck out;
    std::vector<int> visit = lex_bfs_order(g);
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[peo[i]] = i;

    // Later neighborhoods; the elimination test checks that they hang off
    // the earliest one.
    std::vector<std::vector<int>> later(g.n);
    for (int i = 0; i < g.n; ++i) {
        int v = peo[i];
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            if (pos[w] > i) later[v].push_back(w);
        }
        std::sort(later[v].begin(), later[v].end(),
                  [&](int a, int b) { return pos[a] < pos[b]; });
    }
    for (int i = 0; i < g.n; ++i) {
        int v = peo[i];
        if (later[v].empty()) continue;
        int parent = later[v].front();
        for (size_t j = 1; j < later[v].size(); ++j) {
            int u = later[v][j];
            if (!g.has_edge(parent, u)) {
                out.hole = hole_from_failure(g, v, parent, u);
                return out;
            }
        }
    }

    ChordalAnalysis an;
    an.peo = peo;
    // Candidate cliques {v} + later(v); one is swallowed exactly by the
    // clique of some u whose parent is v with |later(u)| = |later(v)| + 1.
    std::vector<char> swallowed(g.n, 0);
    for (int v : peo) {
        if (later[v].empty()) continue;
        int parent = later[v].front();
        if (later[v].size() == later[parent].size() + 1) swallowed[parent] = 1;
    }
    for (int v : peo) {
        if (swallowed[v]) continue;
        std::vector<int> clique = later[v];
        clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        an.maximal_cliques.push_back(std::move(clique));
    }
    std::sort(an.maximal_cliques.begin(), an.maximal_cliques.end());
    std::vector<char> dominated(g.n, 0);
    for (int v : peo) {
        if (dominated[v]) continue;
        an.max_independent_set.push_back(v);
        dominated[v] = 1;
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            dominated[w] = 1;
        }
    }
    std::sort(an.max_independent_set.begin(), an.max_independent_set.end());
    out.analysis = std::move(an);
    return out;
}

// ---------------------------------------------------------------------
// Co-chordal graphs.

namespace {

// Chromatic number of a co-chordal graph: clique number, read as the
// maximum independent set of the chordal complement.
int cochordal_chi(const Graph& complement_part) {
    auto check = chordal_analysis(complement_part);
    if (!check.chordal())
        throw PreconditionError("complement is not chordal");
    return static_cast<int>(check.analysis->max_independent_set.size());
}

}  // namespace

bool decide_cochordal(const Graph& g) {
    Graph h = g.complement();
    auto check = chordal_analysis(h);
    if (!check.chordal()) throw PreconditionError("graph is not co-chordal");
    int chi = static_cast<int>(check.analysis->max_independent_set.size());

    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    auto chi_without = [&](const std::vector<int>& removed) {
        std::vector<int> keep;
        std::set_difference(all.begin(), all.end(), removed.begin(), removed.end(),
                            std::back_inserter(keep));
        if (keep.empty()) return 0;
        return cochordal_chi(h.induced(keep));
    };

    // Maximal independent sets of g are the maximal cliques of h. Phase 1:
    // an even one whose removal drops the chromatic number is a color
    // class of even size in some optimal coloring.
    const auto& mis = check.analysis->maximal_cliques;
    for (const auto& s : mis)
        if (s.size() % 2 == 0 && chi_without(s) == chi - 1) return false;
    // Phase 2: an odd one minus a vertex.
    for (const auto& s : mis) {
        if (s.size() % 2 == 0) continue;
        for (int x : s) {
            std::vector<int> removed;
            for (int y : s)
                if (y != x) removed.push_back(y);
            if (chi_without(removed) == chi - 1) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------
// Co-comparability orders.

std::optional<std::array<int, 3>> find_cocomp_violation(const Graph& g,
                                                        const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n)
        throw PreconditionError("order is not a permutation of the vertices");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        if (v < 0 || v >= g.n || seen[v])
            throw PreconditionError("order is not a permutation of the vertices");
        seen[v] = 1;
    }
    int words = (g.n + 63) / 64;
    std::vector<uint64_t> adjpos(static_cast<size_t>(g.n) * words, 0);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    for (auto [u, v] : g.edges) {
        int a = pos[u], b = pos[v];
        adjpos[static_cast<size_t>(a) * words + b / 64] |= uint64_t{1} << (b % 64);
        adjpos[static_cast<size_t>(b) * words + a / 64] |= uint64_t{1} << (a % 64);
    }
    auto linked = [&](int a, int b) {
        return (adjpos[static_cast<size_t>(a) * words + b / 64] >> (b % 64)) & 1;
    };
    for (int b = 1; b + 1 < g.n; ++b)
        for (int a = 0; a < b; ++a) {
            if (linked(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c)
                if (!linked(b, c) && linked(a, c))
                    return std::array<int, 3>{order[a], order[b], order[c]};
        }
    return std::nullopt;
}

bool verify_cocomp_order(const Graph& g, const std::vector<int>& order) {
    return !find_cocomp_violation(g, order).has_value();
}

std::vector<ColoringType> cocomp_coloring_types(const Graph& g,
                                                const std::vector<int>& order, int k) {
    if (k < 1) throw PreconditionError("palette size must be positive");
    if (find_cocomp_violation(g, order))
        throw PreconditionError("order is not a co-comparability order");
    if (g.n == 0) return {};

    // State per color: (class size, rank of its last vertex), rank 0 being
    // the fictive empty marker; canonical form sorts the pairs.
    using State = std::vector<std::pair<int, int>>;
    std::set<State> states;
    {
        State start(k, {0, 0});
        start.back() = {1, 1};
        std::sort(start.begin(), start.end());
        states.insert(std::move(start));
    }
    for (int next = 2; next <= g.n; ++next) {
        int v = order[next - 1];
        std::set<State> expanded;
        for (const auto& st : states) {
            for (size_t a = 0; a < st.size(); ++a) {
                if (a > 0 && st[a] == st[a - 1]) continue;  // identical entry
                auto [sz, last] = st[a];
                if (last != 0 && g.has_edge(order[last - 1], v)) continue;
                State nxt = st;
                nxt[a] = {sz + 1, next};
                std::sort(nxt.begin(), nxt.end());
                expanded.insert(std::move(nxt));
            }
        }
        states = std::move(expanded);
        if (states.empty()) break;
    }

    std::set<std::vector<int>> types;
    for (const auto& st : states) {
        if (st.front().first == 0) continue;  // an unused color: not a k-chromatic type
        std::vector<int> type;
        for (auto [sz, last] : st) {
            (void)last;
            type.push_back(sz);
        }
        types.insert(std::move(type));  // entries already non-decreasing
    }
    if (types.empty())
        throw PreconditionError("no coloring type with k classes; wrong palette size");
    std::vector<ColoringType> out;
    for (auto& t : types) out.push_back(ColoringType{t});
    return out;
}

bool decide_cocomp(const Graph& g, const std::vector<int>& order, int k) {
    for (const auto& type : cocomp_coloring_types(g, order, k))
        if (!type.all_odd()) return false;
    return true;
}

// ---------------------------------------------------------------------
// Complete colorings.

bool is_complete_coloring(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.n)
        throw PreconditionError("coloring domain does not match the graph");
    std::vector<int> stamp(c.k, -1);
    for (int v = 0; v < g.n; ++v) {
        int seen = 0;
        auto mark = [&](int col) {
            if (stamp[col] != v) {
                stamp[col] = v;
                ++seen;
            }
        };
        mark(c.colors[v]);
        for (auto [w, id] : g.adj[v]) {
            (void)id;
            mark(c.colors[w]);
        }
        if (seen != c.k) return false;
    }
    return true;
}

}  // namespace twinedge
