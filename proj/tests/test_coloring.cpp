#include <numeric>

#include "doctest.h"
#include "support/testutil.hpp"
#include "twinedge/coloring.hpp"
#include "twinedge/errors.hpp"

using namespace twinedge;
using namespace twinedge::test;

TEST_CASE("[coloring] induced colors on fixtures") {
    SUBCASE("triangle with edge colors 0,1,2") {
        Graph tri = cycle_graph(3);  // edges (0,1),(1,2),(0,2)
        ZkEdgeColoring s{3, {0, 1, 2}};
        auto c = induced_coloring(tri, s);
        CHECK(c.colors == std::vector<int>{2, 1, 0});
        CHECK(is_proper(tri, c));
    }
    SUBCASE("two-leaf star, both edges 1 mod 2") {
        Graph s12 = star_graph(2);
        ZkEdgeColoring s{2, {1, 1}};
        auto c = induced_coloring(s12, s);
        CHECK(c.colors == std::vector<int>{0, 1, 1});
    }
    SUBCASE("four-leaf star, all edges 1: valid mod 2, conflicting mod 3") {
        Graph s14 = star_graph(4);
        ZkEdgeColoring mod2{2, {1, 1, 1, 1}};
        CHECK(induced_coloring(s14, mod2).colors[0] == 0);
        CHECK(verify_twin(s14, mod2).valid);
        ZkEdgeColoring mod3{3, {1, 1, 1, 1}};
        auto c3 = induced_coloring(s14, mod3);
        CHECK(c3.colors[0] == 1);  // 4 mod 3
        auto verdict = verify_twin(s14, mod3);
        CHECK_FALSE(verdict.valid);
        CHECK(verdict.conflict.first == 0);
    }
    SUBCASE("deleting the edge colored 2 from the triangle breaks it") {
        Graph tri = cycle_graph(3);
        ZkEdgeColoring s{3, {0, 1, 2}};
        REQUIRE(verify_twin(tri, s).valid);
        Graph without = Graph::from_edges(3, {{0, 1}, {1, 2}});
        ZkEdgeColoring cut{3, {0, 1}};
        CHECK_FALSE(verify_twin(without, cut).valid);
    }
}

TEST_CASE("[coloring] properness") {
    Graph tri = cycle_graph(3);
    CHECK(is_proper(tri, {3, {0, 1, 2}}));
    CHECK_FALSE(is_proper(tri, {3, {0, 1, 1}}));
    Graph edgeless = Graph::from_edges(3, {});
    CHECK(is_proper(edgeless, {1, {0, 0, 0}}));
}

TEST_CASE("[coloring] verify_twin demands a nice graph") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK_THROWS_AS(verify_twin(k2, ZkEdgeColoring{2, {1}}), NotNiceError);
}

TEST_CASE("[coloring] class sizes") {
    CHECK(class_sizes({3, {0, 1, 2}}).sizes == std::vector<int>{1, 1, 1});
    CHECK(class_sizes({3, {0, 0, 1, 1, 2}}).sizes == std::vector<int>{1, 2, 2});
    CHECK(class_sizes({4, {0, 0, 1}}).sizes == std::vector<int>{0, 0, 1, 2});
    CHECK(class_sizes({6, {0, 1, 2, 3, 4, 5}}).sizes ==
          std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK_FALSE(class_sizes({4, {0, 0, 1}}).all_odd());
}

TEST_CASE("[coloring] double counting: sum of induced colors is twice the edge sum") {
    Rng rng(90210);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(3 + trial % 8, 0.5, rng);
        int m = 2 + trial % 6;
        std::uniform_int_distribution<int> color(0, m - 1);
        ZkEdgeColoring s{m, {}};
        long long edge_sum = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            s.values.push_back(color(rng));
            edge_sum += s.values.back();
        }
        auto c = induced_coloring(g, s);
        long long vertex_sum = std::accumulate(c.colors.begin(), c.colors.end(), 0LL);
        CHECK(vertex_sum % m == (2 * edge_sum) % m);
        if (m % 2 == 0) CHECK(vertex_sum % 2 == 0);
    }
}

TEST_CASE("[coloring] deleting a 0-colored edge keeps a valid twin coloring") {
    Rng rng(5150);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 60; ++trial) {
        Graph g = random_nice_graph(9, 0.5, rng);
        if (g.edge_count() == 0) continue;
        int m = 2 + trial % 4;
        std::uniform_int_distribution<int> color(0, m - 1);
        ZkEdgeColoring s{m, {}};
        for (int e = 0; e < g.edge_count(); ++e) s.values.push_back(color(rng));
        if (!verify_twin(g, s).valid) continue;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (s.values[e] != 0) continue;
            std::vector<std::pair<int, int>> rest;
            ZkEdgeColoring cut{m, {}};
            for (int e2 = 0; e2 < g.edge_count(); ++e2)
                if (e2 != e) {
                    rest.push_back(g.edges[e2]);
                    cut.values.push_back(s.values[e2]);
                }
            Graph h = Graph::from_edges(g.n, rest);
            if (!is_nice(h)) continue;
            CHECK(verify_twin(h, cut).valid);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("[coloring] twin verdict is invariant under vertex relabeling") {
    Rng rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_nice_graph(9, 0.5, rng);
        int m = 2 + trial % 4;
        std::uniform_int_distribution<int> color(0, m - 1);
        ZkEdgeColoring s{m, {}};
        for (int e = 0; e < g.edge_count(); ++e) s.values.push_back(color(rng));

        std::vector<int> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = apply_permutation(g, perm);
        ZkEdgeColoring hs{m, std::vector<int>(g.edge_count(), 0)};
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            hs.values[h.edge_id(perm[u], perm[v])] = s.values[e];
        }
        CHECK(verify_twin(g, s).valid == verify_twin(h, hs).valid);
    }
}
