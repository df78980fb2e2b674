#include "twinedge/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "twinedge/errors.hpp"

namespace twinedge {

namespace {

// Iterates non-empty, non-comment lines with 1-based line numbers.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++lineno_;
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == 'c') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(lineno_) + ": " + what);
    }

  private:
    std::istream& in_;
    int lineno_ = 0;
};

}  // namespace

Graph read_dimacs_graph(std::istream& in) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line)) throw ParseError("missing problem line");
    std::istringstream head(line);
    std::string p, kind;
    long long n = -1, m = -1;
    if (!(head >> p >> kind >> n >> m) || p != "p" || kind != "edge" || n < 0 || m < 0)
        lr.fail("expected 'p edge <n> <m>'");
    std::vector<std::pair<int, int>> edges;
    while (lr.next(line)) {
        std::istringstream ls(line);
        std::string tag;
        long long u, v;
        if (!(ls >> tag >> u >> v) || tag != "e") lr.fail("expected 'e <u> <v>'");
        if (u < 1 || v < 1 || u > n || v > n) lr.fail("vertex index out of range");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("edge count does not match the header");
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void write_dimacs_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

VertexColoring read_vertex_coloring(std::istream& in, int n) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line)) throw ParseError("missing palette line");
    std::istringstream head(line);
    std::string tag;
    long long k = -1;
    if (!(head >> tag >> k) || tag != "k" || k < 1) lr.fail("expected 'k <K>'");
    VertexColoring c;
    c.k = static_cast<int>(k);
    c.colors.assign(n, -1);
    while (lr.next(line)) {
        std::istringstream ls(line);
        long long v, col;
        if (!(ls >> tag >> v >> col) || tag != "v") lr.fail("expected 'v <vertex> <color>'");
        if (v < 1 || v > n) lr.fail("vertex index out of range");
        if (col < 0 || col >= k) lr.fail("color out of range");
        if (c.colors[v - 1] != -1) lr.fail("vertex colored twice");
        c.colors[v - 1] = static_cast<int>(col);
    }
    for (int v = 0; v < n; ++v)
        if (c.colors[v] == -1)
            throw ParseError("vertex " + std::to_string(v + 1) + " has no color");
    return c;
}

void write_vertex_coloring(std::ostream& out, const VertexColoring& c) {
    out << "k " << c.k << '\n';
    for (size_t v = 0; v < c.colors.size(); ++v)
        out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
}

ZkEdgeColoring read_edge_coloring(std::istream& in, const Graph& g) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line)) throw ParseError("missing modulus line");
    std::istringstream head(line);
    std::string tag;
    long long m = -1;
    if (!(head >> tag >> m) || tag != "m" || m < 2) lr.fail("expected 'm <M>' with M >= 2");
    ZkEdgeColoring s;
    s.m = static_cast<int>(m);
    s.values.assign(g.edge_count(), -1);
    while (lr.next(line)) {
        std::istringstream ls(line);
        long long u, v, col;
        if (!(ls >> tag >> u >> v >> col) || tag != "s")
            lr.fail("expected 's <u> <v> <color>'");
        if (u < 1 || v < 1 || u > g.n || v > g.n) lr.fail("vertex index out of range");
        int id = g.edge_id(static_cast<int>(u - 1), static_cast<int>(v - 1));
        if (id < 0) lr.fail("edge is not in the graph");
        if (col < 0 || col >= m) lr.fail("color out of range");
        if (s.values[id] != -1) lr.fail("edge colored twice");
        s.values[id] = static_cast<int>(col);
    }
    for (int id = 0; id < g.edge_count(); ++id)
        if (s.values[id] == -1)
            throw ParseError("edge " + std::to_string(g.edges[id].first + 1) + " " +
                             std::to_string(g.edges[id].second + 1) + " has no color");
    return s;
}

void write_edge_coloring(std::ostream& out, const Graph& g, const ZkEdgeColoring& s) {
    out << "m " << s.m << '\n';
    for (int id = 0; id < g.edge_count(); ++id)
        out << "s " << g.edges[id].first + 1 << ' ' << g.edges[id].second + 1 << ' '
            << s.values[id] << '\n';
}

std::vector<int> read_vertex_order(std::istream& in, int n) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line)) throw ParseError("missing order line");
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag != "o") lr.fail("expected 'o <v1> ... <vn>'");
    std::vector<int> order;
    long long v;
    while (ls >> v) {
        if (v < 1 || v > n) lr.fail("vertex index out of range");
        order.push_back(static_cast<int>(v - 1));
    }
    if (static_cast<int>(order.size()) != n) lr.fail("order does not list every vertex");
    std::vector<char> seen(n, 0);
    for (int u : order) {
        if (seen[u]) lr.fail("vertex repeated in order");
        seen[u] = 1;
    }
    return order;
}

void write_vertex_order(std::ostream& out, const std::vector<int>& order) {
    out << 'o';
    for (int v : order) out << ' ' << v + 1;
    out << '\n';
}

CnfFormula read_dimacs_cnf(std::istream& in) {
    LineReader lr(in);
    std::string line;
    if (!lr.next(line)) throw ParseError("missing problem line");
    std::istringstream head(line);
    std::string p, kind;
    long long n = -1, m = -1;
    if (!(head >> p >> kind >> n >> m) || p != "p" || kind != "cnf" || n < 0 || m < 0)
        lr.fail("expected 'p cnf <n> <m>'");
    CnfFormula f;
    f.num_vars = static_cast<int>(n);
    std::vector<int> lits;
    while (lr.next(line)) {
        std::istringstream ls(line);
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (lits.size() != 3) lr.fail("clause must have exactly 3 literals");
                f.clauses.push_back({lits[0], lits[1], lits[2]});
                lits.clear();
            } else {
                if (std::abs(lit) > n) lr.fail("literal out of range");
                lits.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!lits.empty()) throw ParseError("unterminated clause");
    if (static_cast<long long>(f.clauses.size()) != m)
        throw ParseError("clause count does not match the header");
    return f;
}

void write_roles(std::ostream& out, const std::vector<std::string>& roles) {
    for (size_t v = 0; v < roles.size(); ++v)
        out << "r " << v + 1 << ' ' << roles[v] << '\n';
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto in = open_or_fail(path);
    return read_dimacs_graph(in);
}

VertexColoring load_vertex_coloring(const std::string& path, int n) {
    auto in = open_or_fail(path);
    return read_vertex_coloring(in, n);
}

ZkEdgeColoring load_edge_coloring(const std::string& path, const Graph& g) {
    auto in = open_or_fail(path);
    return read_edge_coloring(in, g);
}

std::vector<int> load_vertex_order(const std::string& path, int n) {
    auto in = open_or_fail(path);
    return read_vertex_order(in, n);
}

CnfFormula load_cnf(const std::string& path) {
    auto in = open_or_fail(path);
    return read_dimacs_cnf(in);
}

}  // namespace twinedge
