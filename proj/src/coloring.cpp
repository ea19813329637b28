#include "cgc/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace cgc {

bool is_permutation(const VertexSequence& s, int n) {
    if (s.size() != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : s.order) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Coloring empty_coloring(int n) {
    Coloring c;
    c.color.assign(static_cast<std::size_t>(n) + 1, kUncolored);
    c.used_colors = 0;
    return c;
}

int color_vertex(const Graph& g, int v, const Coloring& partial) {
    // The answer is at most deg(v)+1, so neighbor colors above that are irrelevant.
    const int deg = g.degree(v);
    std::vector<char> taken(static_cast<std::size_t>(deg) + 2, 0);
    for (int u : g.adj[v]) {
        const int cu = partial.color[u];
        if (cu != kUncolored && cu <= deg + 1) taken[cu] = 1;
    }
    int c = 1;
    while (taken[c]) ++c;
    return c;
}

Coloring first_fit(const Graph& g, const VertexSequence& s) {
    Coloring c = empty_coloring(g.n);
    // stamp trick keeps the whole pass O(n+m) without clearing scratch per vertex
    std::vector<int> stamp(static_cast<std::size_t>(g.n) + 2, 0);
    int version = 0;
    for (int v : s.order) {
        ++version;
        for (int u : g.adj[v]) {
            const int cu = c.color[u];
            if (cu != kUncolored) stamp[cu] = version;
        }
        int col = 1;
        while (stamp[col] == version) ++col;
        c.color[v] = col;
        c.used_colors = std::max(c.used_colors, col);
    }
    return c;
}

bool is_connected_sequence(const Graph& g, const VertexSequence& s) {
    std::vector<int> pos(static_cast<std::size_t>(g.n) + 1, 0);
    for (int i = 0; i < s.size(); ++i) pos[s.order[i]] = i + 1;
    for (int i = 1; i < s.size(); ++i) {
        const int v = s.order[i];
        bool has_earlier = false;
        for (int u : g.adj[v])
            if (pos[u] < pos[v]) {
                has_earlier = true;
                break;
            }
        if (!has_earlier) return false;
    }
    return true;
}

bool validate_grundy(const Graph& g, const Coloring& c) {
    for (int v = 1; v <= g.n; ++v)
        if (!c.is_colored(v)) return false;
    for (int v = 1; v <= g.n; ++v) {
        const int cv = c.color[v];
        // below[k] = 1 when some neighbor has color k (k < cv)
        std::vector<char> below(static_cast<std::size_t>(cv), 0);
        for (int u : g.adj[v]) {
            if (c.color[u] == cv) return false;  // properness
            if (c.color[u] < cv) below[c.color[u]] = 1;
        }
        for (int k = 1; k < cv; ++k)
            if (!below[k]) return false;  // Grundy property
    }
    return true;
}

PositionIndex build_position_index(const Graph& g, const VertexSequence& s) {
    PositionIndex idx;
    const std::size_t sz = static_cast<std::size_t>(g.n) + 1;
    idx.p.assign(sz, 0);
    idx.f.assign(sz, 0);
    idx.fc.assign(sz, 0);
    for (int i = 0; i < s.size(); ++i) idx.p[s.order[i]] = i + 1;
    for (int v = 1; v <= g.n; ++v) {
        int first = 0, count = 0;
        for (int u : g.adj[v]) {
            const int pu = idx.p[u];
            if (first == 0 || pu < first) first = pu;
            if (pu < idx.p[v]) ++count;
        }
        idx.f[v] = first;
        idx.fc[v] = count;
    }
    return idx;
}

std::string coloring_to_dimacs(const Coloring& c) {
    std::ostringstream out;
    for (std::size_t v = 1; v < c.color.size(); ++v)
        out << "v " << v << " " << c.color[v] << "\n";
    return out.str();
}

}  // namespace cgc
