// Combinatorial upper bounds on the (connected) Grundy number and the pruned
// per-vertex color sets consumed by the IP formulations.

#ifndef CGC_BOUNDS_HPP
#define CGC_BOUNDS_HPP

#include <optional>
#include <vector>

#include "cgc/graph.hpp"

namespace cgc {

struct BoundsReport {
    int delta2_plus_one = 1;
    int psi_global = 1;               // max over vertices of psi_cap
    std::vector<int> psi_cap;         // size n+1; per-vertex color cap
    std::optional<int> stair_factor;  // absent when n exceeds the search limit
    int best = 1;                     // min of the available bounds
};

// 1 + max over u of the largest degree among neighbors of u whose degree is
// <= d(u); 1 for edgeless graphs.
int delta2_plus_one(const Graph& g);

// Monotone-decreasing fixpoint of per-vertex caps. cap(v) starts at d(v)+1;
// each pass recomputes, from the previous pass's caps, the largest c <= cap(v)
// such that the neighbor caps sorted descending a1 >= a2 >= ... satisfy
// a_i >= c - i for all i in 1..c-1. Returns (max cap, caps).
std::pair<int, std::vector<int>> psi_bound(const Graph& g);

// Exact maximum length of a feasible Grundy sequence (the i-th vertex keeps
// degree >= i-1 after deleting the later sequence vertices), by backtracking.
// Returns nullopt when n > limit: the bound is omitted rather than guessed.
std::optional<int> stair_factor(const Graph& g, int limit = 20);

BoundsReport compute_bounds(const Graph& g, int stair_limit = 20);

// Index sets for the formulations. K = 1..best, K_v = 1..kv_max[v],
// K_vt = 1..min(kv_max[v], t), V_k = {v : kv_max[v] >= k}, T = 1..n.
struct ColorSets {
    int best = 1;                      // |K|
    int T = 0;                         // time horizon = n
    std::vector<int> kv_max;           // size n+1: per-vertex max usable color
    std::vector<std::vector<int>> V_k; // index k in 1..best (index 0 unused)

    int kvt_max(int v, int t) const { return kv_max[v] < t ? kv_max[v] : t; }
};

ColorSets build_color_sets(const Graph& g, const BoundsReport& report);

}  // namespace cgc

#endif
