#include "cgc/localsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgc {

bool can_move_left(const Graph& g, const PositionIndex& idx, int u, int v) {
    (void)g;
    return idx.p[u] == 1 || idx.f[v] < idx.p[u];
}

bool can_move_right(const Graph& g, const PositionIndex& idx, int u, int v) {
    const int pv = idx.p[v];
    const int pu = idx.p[u];
    for (int w : g.adj[v]) {
        const int pw = idx.p[w];
        if (pw <= pv || pw > pu) continue;
        if (idx.f[w] < pv) continue;
        if (idx.f[w] == pv && idx.fc[w] > 1) continue;
        return false;
    }
    return true;
}

namespace {

// v leaves its position and lands on n_position; the block in between shifts
// by one toward the vacated slot.
VertexSequence apply_move(const VertexSequence& s, int v, int old_position, int n_position) {
    VertexSequence out = s;
    if (old_position < n_position) {
        for (int p = old_position; p < n_position; ++p) out.order[p - 1] = out.order[p];
    } else {
        for (int p = old_position; p > n_position; --p) out.order[p - 1] = out.order[p - 2];
    }
    out.order[n_position - 1] = v;
    return out;
}

}  // namespace

MoveResult color_sequence(const Graph& g, const VertexSequence& s, const Coloring& colors,
                          int v, int n_position, int f_position) {
    int old_position = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s.order[i] == v) {
            old_position = i + 1;
            break;
        }
    if (old_position == 0) throw std::invalid_argument("color_sequence: vertex not in sequence");

    MoveResult res;
    res.sequence = apply_move(s, v, old_position, n_position);

    // Positions <= f_position hold the same vertices in s and the moved
    // sequence, so their colors carry over.
    res.coloring = empty_coloring(g.n);
    int max_color = 0;
    for (int p = 1; p <= f_position; ++p) {
        const int w = res.sequence.at_position(p);
        res.coloring.color[w] = colors.color[w];
        max_color = std::max(max_color, colors.color[w]);
    }

    // Within the critical window (positions <= n_position) only v and its
    // neighbors can change color while nothing changed yet; after the first
    // observed change everything downstream is recolored.
    bool changed = false;
    for (int p = f_position + 1; p <= g.n; ++p) {
        const int w = res.sequence.at_position(p);
        if (!changed) {
            const bool in_closed_nbhd = w == v || g.has_edge(v, w);
            if (p > n_position || !in_closed_nbhd) {
                res.coloring.color[w] = colors.color[w];
            } else {
                res.coloring.color[w] = color_vertex(g, w, res.coloring);
                if (res.coloring.color[w] != colors.color[w]) changed = true;
            }
        } else {
            res.coloring.color[w] = color_vertex(g, w, res.coloring);
        }
        max_color = std::max(max_color, res.coloring.color[w]);
    }
    res.coloring.used_colors = max_color;
    res.value = max_color;
    return res;
}

LocalSearchResult local_search(const Graph& g, const VertexSequence& s, Mode mode,
                               const StopCheck& stop) {
    if (!is_permutation(s, g.n)) throw std::invalid_argument("local_search: not a permutation");
    if (mode == Mode::connected && !is_connected_sequence(g, s))
        throw std::invalid_argument("local_search: sequence not connected in connected mode");

    LocalSearchResult cur;
    cur.sequence = s;
    cur.coloring = first_fit(g, s);
    cur.value = cur.coloring.used_colors;

    const bool gated = mode == Mode::connected;
    bool has_increase = true;
    while (has_increase) {
        has_increase = false;
        const PositionIndex idx = build_position_index(g, cur.sequence);
        for (int v = 1; v <= g.n && !has_increase; ++v) {
            if (stop && stop()) return cur;
            for (int u : g.adj[v]) {
                if (idx.p[u] < idx.p[v] && (!gated || can_move_left(g, idx, u, v))) {
                    MoveResult moved =
                        color_sequence(g, cur.sequence, cur.coloring, v, idx.p[u], idx.p[u] - 1);
                    if (moved.value > cur.value) {
                        cur.sequence = std::move(moved.sequence);
                        cur.coloring = std::move(moved.coloring);
                        cur.value = moved.value;
                        ++cur.accepted_moves;
                        has_increase = true;
                        break;
                    }
                }
                if (idx.p[u] > idx.p[v] && (!gated || can_move_right(g, idx, u, v))) {
                    MoveResult moved =
                        color_sequence(g, cur.sequence, cur.coloring, v, idx.p[u], idx.p[v] - 1);
                    if (moved.value > cur.value) {
                        cur.sequence = std::move(moved.sequence);
                        cur.coloring = std::move(moved.coloring);
                        cur.value = moved.value;
                        ++cur.accepted_moves;
                        has_increase = true;
                        break;
                    }
                }
            }
        }
    }
    return cur;
}

LocalSearchResult local_search(const Graph& g, const RandomKeyVector& x, Mode mode,
                               const StopCheck& stop) {
    const DecodeResult d = decode(g, x, mode);
    return local_search(g, d.sequence, mode, stop);
}

}  // namespace cgc
