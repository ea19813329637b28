#include "cgc/exact.hpp"

#include <algorithm>
#include <string>

#include "cgc/bounds.hpp"

namespace cgc {

namespace {

void check_budget(const char* what, int n, int limit) {
    if (n > limit)
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(n) +
                             " vertices exceeds the budget of " + std::to_string(limit));
}

// Shared DFS over sequence prefixes. `connected_only` restricts candidates to
// reached vertices (those with a colored neighbor) after the first pick.
struct SequenceSearch {
    const Graph& g;
    bool connected_only;
    int upper;  // sound upper bound; reaching it stops the search

    std::vector<int> color;        // per vertex, kUncolored when unassigned
    std::vector<int> reach_count;  // colored-neighbor count
    std::vector<int> prefix;
    int cur_max = 0;
    int best = 0;
    std::vector<int> best_seq;

    SequenceSearch(const Graph& graph, bool connected, int ub)
        : g(graph), connected_only(connected), upper(ub) {
        color.assign(static_cast<std::size_t>(g.n) + 1, kUncolored);
        reach_count.assign(static_cast<std::size_t>(g.n) + 1, 0);
        prefix.reserve(static_cast<std::size_t>(g.n));
    }

    int first_fit_color(int v) const {
        const int deg = g.degree(v);
        std::vector<char> taken(static_cast<std::size_t>(deg) + 2, 0);
        for (int u : g.adj[v])
            if (color[u] != kUncolored && color[u] <= deg + 1) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        return c;
    }

    void dfs() {
        const int colored = static_cast<int>(prefix.size());
        if (colored == g.n) {
            if (cur_max > best) {
                best = cur_max;
                best_seq = prefix;
            }
            return;
        }
        // each remaining vertex can add at most one new color
        if (cur_max + (g.n - colored) <= best) return;
        for (int v = 1; v <= g.n && best < upper; ++v) {
            if (color[v] != kUncolored) continue;
            if (connected_only && colored > 0 && reach_count[v] == 0) continue;
            const int c = first_fit_color(v);
            color[v] = c;
            for (int u : g.adj[v]) ++reach_count[u];
            prefix.push_back(v);
            const int saved_max = cur_max;
            cur_max = std::max(cur_max, c);
            dfs();
            cur_max = saved_max;
            prefix.pop_back();
            for (int u : g.adj[v]) --reach_count[u];
            color[v] = kUncolored;
        }
    }
};

ExactResult run_sequence_search(const Graph& g, bool connected_only) {
    const int upper = compute_bounds(g).best;
    SequenceSearch search(g, connected_only, upper);
    search.dfs();
    ExactResult res;
    res.value = search.best;
    res.witness.order = search.best_seq;
    return res;
}

}  // namespace

ExactResult brute_gamma_c(const Graph& g, int limit) {
    check_budget("brute_gamma_c", g.n, limit);
    if (!is_connected(g))
        throw std::invalid_argument("brute_gamma_c: graph must be connected");
    return run_sequence_search(g, /*connected_only=*/true);
}

ExactResult brute_gamma(const Graph& g, int limit) {
    check_budget("brute_gamma", g.n, limit);
    return run_sequence_search(g, /*connected_only=*/false);
}

namespace {

bool colorable_with(const Graph& g, int k, const std::vector<int>& order, std::size_t i,
                    std::vector<int>& color, int used) {
    if (i == order.size()) return true;
    const int v = order[i];
    // trying colors beyond used+1 only permutes color names
    const int hi = std::min(k, used + 1);
    for (int c = 1; c <= hi; ++c) {
        bool ok = true;
        for (int u : g.adj[v])
            if (color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable_with(g, k, order, i + 1, color, std::max(used, c))) return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

int brute_chromatic(const Graph& g, int limit) {
    check_budget("brute_chromatic", g.n, limit);
    std::vector<int> order;
    for (int v = 1; v <= g.n; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> color(static_cast<std::size_t>(g.n) + 1, 0);
        if (colorable_with(g, k, order, 0, color, 0)) return k;
    }
    return g.n;  // unreachable: k = n always colors
}

namespace {

void vertex_max_dfs(const Graph& g, std::vector<int>& color, int colored,
                    std::vector<int>& vmax) {
    if (colored == g.n) return;
    for (int v = 1; v <= g.n; ++v) {
        if (color[v] != kUncolored) continue;
        const int deg = g.degree(v);
        std::vector<char> taken(static_cast<std::size_t>(deg) + 2, 0);
        for (int u : g.adj[v])
            if (color[u] != kUncolored && color[u] <= deg + 1) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
        vmax[v] = std::max(vmax[v], c);
        vertex_max_dfs(g, color, colored + 1, vmax);
        color[v] = kUncolored;
    }
}

}  // namespace

std::vector<int> brute_vertex_color_max(const Graph& g, int limit) {
    check_budget("brute_vertex_color_max", g.n, limit);
    std::vector<int> color(static_cast<std::size_t>(g.n) + 1, kUncolored);
    std::vector<int> vmax(static_cast<std::size_t>(g.n) + 1, 0);
    vertex_max_dfs(g, color, 0, vmax);
    return vmax;
}

}  // namespace cgc
