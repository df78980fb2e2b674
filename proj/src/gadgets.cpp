#include "twinedge/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "twinedge/errors.hpp"

namespace twinedge {

bool evaluate_cnf(const CnfFormula& f, const std::vector<char>& assignment) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl) {
            int var = std::abs(lit) - 1;
            if ((lit > 0) == static_cast<bool>(assignment[var])) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool cnf_satisfiable(const CnfFormula& f) {
    if (f.num_vars > 24) throw SizeLimitError("formula too large for exhaustive search");
    std::vector<char> assignment(f.num_vars, 0);
    for (long long bits = 0; bits < (1LL << f.num_vars); ++bits) {
        for (int i = 0; i < f.num_vars; ++i) assignment[i] = (bits >> i) & 1;
        if (evaluate_cnf(f, assignment)) return true;
    }
    return false;
}

ClauseGadget clause_gadget(int x, int y, int z, int anchor, int first_fresh_id) {
    if (anchor == x || anchor == y || anchor == z)
        throw PreconditionError("anchor vertex coincides with a literal vertex");
    for (int ext : {x, y, z, anchor})
        if (ext < 0 || ext >= first_fresh_id)
            throw PreconditionError("external vertices must precede the fresh block");
    ClauseGadget gj;
    for (int i = 0; i < 5; ++i) gj.a[i] = first_fresh_id + i;
    const auto& a = gj.a;
    gj.edges = {{x, a[0]},    {y, a[1]},    {a[0], a[1]}, {a[0], a[2]},
                {a[1], a[2]}, {a[2], a[3]}, {a[3], a[4]}, {a[3], anchor},
                {a[4], anchor}, {z, a[4]}};
    return gj;
}

namespace {

// Lexicographically smallest proper extension of the gadget's internal
// vertices given the external colors, over the 3-color palette.
std::array<int, 5> extend_gadget(const ClauseGadget& gj,
                                 const std::vector<int>& colors) {
    std::array<int, 5> choice{};
    std::vector<int> local(colors);
    auto fits = [&](int upto) {
        for (auto [u, v] : gj.edges) {
            int cu = u >= gj.a[0] ? (u - gj.a[0] <= upto ? choice[u - gj.a[0]] : -1)
                                  : local[u];
            int cv = v >= gj.a[0] ? (v - gj.a[0] <= upto ? choice[v - gj.a[0]] : -1)
                                  : local[v];
            if (cu >= 0 && cv >= 0 && cu == cv) return false;
        }
        return true;
    };
    for (int code = 0; code < 3 * 3 * 3 * 3 * 3; ++code) {
        int c = code;
        for (int i = 4; i >= 0; --i) {
            choice[i] = c % 3;
            c /= 3;
        }
        if (fits(4)) return choice;
    }
    throw std::logic_error("clause gadget admits no proper extension");
}

}  // namespace

ReductionInstance sat_to_allodd_instance(const CnfFormula& f, int k) {
    if (k < 3) throw PreconditionError("palette must be at least 3");
    for (const auto& cl : f.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw PreconditionError("literal out of range");

    ReductionInstance inst;
    inst.source = f;
    int nv = f.num_vars;
    if (nv % 2 == 1) {
        ++nv;
        inst.variables_added = 1;
    }

    // Split the clauses by the all-true assignment: a clause with a
    // positive literal is on the true side.
    auto is_true_side = [](const std::array<int, 3>& cl) {
        return cl[0] > 0 || cl[1] > 0 || cl[2] > 0;
    };
    long long m_true = 0, m_false = 0;
    for (const auto& cl : f.clauses) (is_true_side(cl) ? m_true : m_false)++;
    std::vector<std::array<int, 3>> clauses;
    if (m_true % 2 == 1 || m_false % 2 == 1) {
        inst.clauses_doubled = true;
        for (const auto& cl : f.clauses) {
            clauses.push_back(cl);
            clauses.push_back(cl);
        }
    } else {
        clauses = f.clauses;
    }

    const int mu = static_cast<int>(clauses.size());
    const int xt = 2 * nv, xf = 2 * nv + 1, hub = 2 * nv + 2;
    const int gadget_base = hub + 1;
    const int pad_base = gadget_base + 5 * mu;
    const int total = pad_base + (k - 3);

    std::vector<std::pair<int, int>> edges;
    inst.roles.assign(total, "");
    for (int i = 0; i < nv; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        edges.emplace_back(hub, 2 * i);
        edges.emplace_back(hub, 2 * i + 1);
        inst.roles[2 * i] = "lit:" + std::to_string(i + 1) + ":+";
        inst.roles[2 * i + 1] = "lit:" + std::to_string(i + 1) + ":-";
    }
    edges.emplace_back(hub, xt);
    edges.emplace_back(hub, xf);
    inst.roles[xt] = "XT";
    inst.roles[xf] = "XF";
    inst.roles[hub] = "R";

    auto literal_vertex = [](int lit) {
        return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1;
    };
    std::vector<ClauseGadget> gadgets;
    for (int j = 0; j < mu; ++j) {
        const auto& cl = clauses[j];
        int anchor = is_true_side(cl) ? xt : xf;
        ClauseGadget gj = clause_gadget(literal_vertex(cl[0]), literal_vertex(cl[1]),
                                        literal_vertex(cl[2]), anchor,
                                        gadget_base + 5 * j);
        for (auto e : gj.edges) edges.push_back(e);
        for (int i = 0; i < 5; ++i)
            inst.roles[gj.a[i]] =
                "gadget:" + std::to_string(j) + ":a" + std::to_string(i + 1);
        gadgets.push_back(gj);
    }
    for (int p = 0; p < k - 3; ++p) {
        int v = pad_base + p;
        inst.roles[v] = "pad:" + std::to_string(p);
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }

    inst.graph = Graph::from_edges(total, edges);

    // Witness coloring from the all-true assignment: T = 0, F = 1, R = 2.
    inst.witness.k = k;
    inst.witness.colors.assign(total, 0);
    for (int i = 0; i < nv; ++i) {
        inst.witness.colors[2 * i] = 0;
        inst.witness.colors[2 * i + 1] = 1;
    }
    inst.witness.colors[xt] = 0;
    inst.witness.colors[xf] = 1;
    inst.witness.colors[hub] = 2;
    for (const auto& gj : gadgets) {
        auto ext = extend_gadget(gj, inst.witness.colors);
        for (int i = 0; i < 5; ++i) inst.witness.colors[gj.a[i]] = ext[i];
    }
    for (int p = 0; p < k - 3; ++p) inst.witness.colors[pad_base + p] = 3 + p;

    inst.clique = {0, 1, hub};
    for (int p = 0; p < k - 3; ++p) inst.clique.push_back(pad_base + p);
    return inst;
}

HGadget build_h_gadget(int p, int ell, int k) {
    if (p < 2 || p % 2 != 0) throw PreconditionError("p must be even and at least 2");
    if (ell < 1) throw PreconditionError("ell must be positive");
    if (k < 3) throw PreconditionError("palette must be at least 3");
    if (ell > k - 1)
        throw PreconditionError("ell must not exceed the clique size k-1");

    const int clique_sz = k - 1;
    const long long s_full = static_cast<long long>(ell) * (p - 1);
    const int s = static_cast<int>(s_full % 2 == 1 ? s_full : s_full - 1);
    if (s < 1) throw PreconditionError("independent set would be empty");

    HGadget h;
    h.cliques.assign(p, {});
    const int s_base = p * clique_sz;
    auto clique_vertex = [&](int i, int t) { return i * clique_sz + t; };
    auto s_vertex = [&](int band, int j) { return s_base + band * ell + j; };
    auto s_exists = [&](int band, int j) { return band * ell + j < s; };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i) {
        for (int t = 0; t < clique_sz; ++t) h.cliques[i].push_back(clique_vertex(i, t));
        for (int t = 0; t < clique_sz; ++t)
            for (int t2 = t + 1; t2 < clique_sz; ++t2)
                edges.emplace_back(clique_vertex(i, t), clique_vertex(i, t2));
    }
    // Parts of clique i+1: consecutive blocks of size at most
    // ceil(clique_sz / ell).
    const int q = clique_sz / ell, r = clique_sz % ell;
    auto part_range = [&](int j) {
        int begin = j * q + std::min(j, r);
        int size = q + (j < r ? 1 : 0);
        return std::make_pair(begin, begin + size);
    };
    for (int band = 0; band < p - 1; ++band) {
        for (int j = 0; j < ell; ++j) {
            if (!s_exists(band, j)) continue;
            int x = s_vertex(band, j);
            h.s_set.push_back(x);
            for (int t = 0; t < clique_sz; ++t)
                edges.emplace_back(clique_vertex(band, t), x);
            auto [b, e] = part_range(j);
            for (int t = b; t < e; ++t)
                edges.emplace_back(x, clique_vertex(band + 1, t));
        }
    }
    h.graph = Graph::from_edges(s_base + s, edges);
    return h;
}

int degree_reduction_bound(int k) {
    if (k < 3) throw PreconditionError("palette must be at least 3");
    return k + static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k - 2))));
}

DegreeReduced reduce_degree(const Graph& g, int k) {
    const int gk = degree_reduction_bound(k);
    const int ell = 1 + (gk - k);

    DegreeReduced out;
    out.graph = g;
    out.roles.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.roles[v] = "orig:" + std::to_string(v);

    while (true) {
        const Graph& cur = out.graph;
        int delta = cur.max_degree();
        if (delta <= gk) break;
        int x = -1;
        for (int v = 0; v < cur.n; ++v)
            if (cur.degree(v) == delta) {
                x = v;
                break;
            }
        std::vector<int> nbrs;
        for (auto [w, id] : cur.adj[x]) {
            (void)id;
            nbrs.push_back(w);
        }

        int p = 2 * ((delta + 2 * ell - 1) / (2 * ell)) + 2;
        HGadget h = build_h_gadget(p, ell, k);

        // Old vertices keep their order with x removed; the gadget block
        // follows.
        std::vector<int> remap(cur.n, -1);
        int next = 0;
        for (int v = 0; v < cur.n; ++v)
            if (v != x) remap[v] = next++;
        const int h_base = next;

        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : cur.edges)
            if (u != x && v != x) edges.emplace_back(remap[u], remap[v]);
        for (auto [u, v] : h.graph.edges) edges.emplace_back(h_base + u, h_base + v);
        // Matching between the removed vertex's neighborhood and S, in
        // band-major order.
        assert(static_cast<int>(h.s_set.size()) >= delta);
        for (int t = 0; t < delta; ++t)
            edges.emplace_back(remap[nbrs[t]], h_base + h.s_set[t]);

        std::vector<std::string> roles(h_base + h.graph.n);
        for (int v = 0; v < cur.n; ++v)
            if (v != x) roles[remap[v]] = out.roles[v];
        std::string tag = "h" + std::to_string(out.rounds) + ":";
        for (int i = 0; i < p; ++i)
            for (int t = 0; t < k - 1; ++t)
                roles[h_base + h.cliques[i][t]] =
                    tag + "clique:" + std::to_string(i) + ":" + std::to_string(t);
        for (size_t j = 0; j < h.s_set.size(); ++j)
            roles[h_base + h.s_set[j]] = tag + "S:" + std::to_string(j);

        out.graph = Graph::from_edges(h_base + h.graph.n, edges);
        out.roles = std::move(roles);
        ++out.rounds;
    }
    return out;
}

}  // namespace twinedge
