#pragma once

#include <functional>
#include <vector>

#include "twinedge/coloring.hpp"
#include "twinedge/graph.hpp"

namespace twinedge {

// Hard work limits for the exact computations. Exceeding a limit raises
// SizeLimitError; results are never silently truncated.
struct OracleLimits {
    int max_vertices = 18;                 // for anything enumerating vertex colorings
    long long node_budget = 50'000'000;    // backtracking nodes per call
    double max_bits = 80.0;                // |E| * log2(chi+1) gate for the twin search
};

// Exact chromatic number by branch and bound over canonical partitions
// (first vertex pinned to class 0, a new class only as the lowest unused
// index).
int chromatic_number(const Graph& g, const OracleLimits& lim = {});

// All optimal colorings as canonical set partitions: classes sorted
// ascending, classes ordered by smallest element; duplicate-free and
// exhaustive.
struct OptimalColoringEnumeration {
    int k = 0;
    std::vector<std::vector<std::vector<int>>> partitions;
};

OptimalColoringEnumeration enumerate_optimal_partitions(const Graph& g,
                                                        const OracleLimits& lim = {});

// Streaming variant; the callback returns false to stop early.
void for_each_optimal_partition(
    const Graph& g, const OracleLimits& lim,
    const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

// True iff every optimal partition has all class sizes odd.
bool all_odd_all_optimal(const Graph& g, const OracleLimits& lim = {});

// Is there any edge coloring over Z_m whose induced vertex coloring is
// proper? Decided exactly, per connected component, choosing between the
// two routes below by estimated cost.
bool exists_twin_coloring(const Graph& g, int m, const OracleLimits& lim = {});

// Route 1: exhaustive odometer over Z_m^{|E|} with early pruning (a fully
// determined vertex is checked against its determined neighbors at once).
bool exists_twin_coloring_odometer(const Graph& g, int m, long long node_budget);

// Route 2: enumerate proper vertex colorings f over Z_m and decide for
// each whether some edge coloring induces it, via a spanning-tree residual
// that reduces realizability to one linear congruence.
bool exists_twin_coloring_algebraic(const Graph& g, int m, long long node_budget);

// Smallest m >= 2 admitting a twin m-edge coloring; the search is bounded
// by chromatic_number(g) + 1.
int chi_it_bruteforce(const Graph& g, const OracleLimits& lim = {});

// The same value predicted from the chromatic number: chi+1 exactly when
// chi = 2 (mod 4) and every optimal partition leaves some connected
// component with all chi classes of odd size; otherwise max(chi, 2).
int chi_it_predict(const Graph& g, const OracleLimits& lim = {});

}  // namespace twinedge
