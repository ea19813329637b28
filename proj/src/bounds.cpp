#include "cgc/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace cgc {

int delta2_plus_one(const Graph& g) {
    int delta2 = 0;
    for (int u = 1; u <= g.n; ++u) {
        const int du = g.degree(u);
        for (int v : g.adj[u])
            if (g.degree(v) <= du) delta2 = std::max(delta2, g.degree(v));
    }
    return delta2 + 1;
}

namespace {

// Largest c <= hi such that the neighbor caps (sorted descending) satisfy
// a_i >= c - i for i in 1..c-1. c = 1 is always feasible.
int feasible_cap(const std::vector<int>& sorted_caps, int hi) {
    for (int c = hi; c >= 2; --c) {
        if (c - 1 > static_cast<int>(sorted_caps.size())) continue;
        bool ok = true;
        for (int i = 1; i < c; ++i)
            if (sorted_caps[static_cast<std::size_t>(i) - 1] < c - i) {
                ok = false;
                break;
            }
        if (ok) return c;
    }
    return 1;
}

}  // namespace

std::pair<int, std::vector<int>> psi_bound(const Graph& g) {
    std::vector<int> cap(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) cap[v] = g.degree(v) + 1;
    // Jacobi passes: new caps are computed from the previous pass's caps, so a
    // pass is deterministic regardless of vertex evaluation order. Each
    // non-final pass lowers at least one cap, so passes <= sum of caps.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> next = cap;
        std::vector<int> nbr;
        for (int v = 1; v <= g.n; ++v) {
            nbr.clear();
            for (int u : g.adj[v]) nbr.push_back(cap[u]);
            std::sort(nbr.begin(), nbr.end(), std::greater<int>());
            const int c = feasible_cap(nbr, cap[v]);
            if (c < cap[v]) {
                next[v] = c;
                changed = true;
            }
        }
        cap.swap(next);
    }
    int psi = 1;
    for (int v = 1; v <= g.n; ++v) psi = std::max(psi, cap[v]);
    return {psi, cap};
}

namespace {

// Feasibility of a length-r sequence, built back to front: the j-th chosen
// vertex (j = 1 is the sequence's last) must keep at least r-j neighbors
// outside the already-chosen set.
struct StairSearch {
    const Graph& g;
    int r = 0;
    std::vector<char> chosen;
    std::vector<int> order;  // vertices sorted by degree descending (tie: index)

    explicit StairSearch(const Graph& graph) : g(graph) {
        chosen.assign(static_cast<std::size_t>(g.n) + 1, 0);
        for (int v = 1; v <= g.n; ++v) order.push_back(v);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    int outside_degree(int v) const {
        int d = 0;
        for (int u : g.adj[v])
            if (!chosen[u]) ++d;
        return d;
    }

    bool extend(int j) {
        if (j > r) return true;
        for (int v : order) {
            if (chosen[v]) continue;
            if (outside_degree(v) < r - j) continue;
            chosen[v] = 1;
            if (extend(j + 1)) return true;
            chosen[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<int> stair_factor(const Graph& g, int limit) {
    if (g.n > limit) return std::nullopt;
    const int hi = std::min(g.n, g.max_degree() + 1);
    for (int r = hi; r >= 2; --r) {
        StairSearch search(g);
        search.r = r;
        if (search.extend(1)) return r;
    }
    return 1;
}

BoundsReport compute_bounds(const Graph& g, int stair_limit) {
    BoundsReport rep;
    rep.delta2_plus_one = delta2_plus_one(g);
    auto [psi, caps] = psi_bound(g);
    rep.psi_global = psi;
    rep.psi_cap = std::move(caps);
    rep.stair_factor = stair_factor(g, stair_limit);
    rep.best = std::min(rep.delta2_plus_one, rep.psi_global);
    if (rep.stair_factor) rep.best = std::min(rep.best, *rep.stair_factor);
    return rep;
}

ColorSets build_color_sets(const Graph& g, const BoundsReport& report) {
    ColorSets cs;
    cs.best = report.best;
    cs.T = g.n;
    cs.kv_max.assign(static_cast<std::size_t>(g.n) + 1, 0);
    cs.V_k.assign(static_cast<std::size_t>(cs.best) + 1, {});
    for (int v = 1; v <= g.n; ++v) {
        cs.kv_max[v] = std::min(report.best, report.psi_cap[v]);
        for (int k = 1; k <= cs.kv_max[v]; ++k) cs.V_k[k].push_back(v);
    }
    return cs;
}

}  // namespace cgc
