#include "cgc/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgc {

const char* mode_name(Mode m) { return m == Mode::connected ? "connected" : "plain"; }

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

}  // namespace

VertexSequence connected_smallest_degree_first(const Graph& g) {
    require_connected(g, "connected_smallest_degree_first");
    std::vector<int> rdeg(static_cast<std::size_t>(g.n) + 1, 0);  // degree in residual H
    for (int v = 1; v <= g.n; ++v) rdeg[v] = g.degree(v);
    std::vector<char> reached(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<char> placed(static_cast<std::size_t>(g.n) + 1, 0);

    int start = 1;
    for (int v = 2; v <= g.n; ++v)
        if (rdeg[v] < rdeg[start]) start = v;
    reached[start] = 1;

    VertexSequence s;
    s.order.reserve(static_cast<std::size_t>(g.n));
    for (int step = 0; step < g.n; ++step) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (!reached[v] || placed[v]) continue;
            if (pick == 0 || rdeg[v] < rdeg[pick]) pick = v;
        }
        placed[pick] = 1;
        s.order.push_back(pick);
        for (int u : g.adj[pick]) {
            if (!placed[u]) reached[u] = 1;
            --rdeg[u];  // pick leaves the residual graph
        }
    }
    return s;
}

VertexSequence connected_max_degree_first(const Graph& g) {
    require_connected(g, "connected_max_degree_first");
    std::vector<char> reached(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<char> placed(static_cast<std::size_t>(g.n) + 1, 0);
    int start = 1;
    for (int v = 2; v <= g.n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    reached[start] = 1;

    VertexSequence s;
    s.order.reserve(static_cast<std::size_t>(g.n));
    for (int step = 0; step < g.n; ++step) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (!reached[v] || placed[v]) continue;
            if (pick == 0 || g.degree(v) > g.degree(pick)) pick = v;
        }
        placed[pick] = 1;
        s.order.push_back(pick);
        for (int u : g.adj[pick])
            if (!placed[u]) reached[u] = 1;
    }
    return s;
}

std::pair<VertexSequence, Coloring> dsatur_sequence(const Graph& g) {
    require_connected(g, "dsatur_sequence");
    Coloring c = empty_coloring(g.n);
    std::vector<int> rdeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) rdeg[v] = g.degree(v);
    // distinct colors seen in each uncolored vertex's neighborhood; at most
    // deg(v) entries, linear-scan insertion
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(g.n) + 1);
    std::vector<int> sat(static_cast<std::size_t>(g.n) + 1, 0);

    VertexSequence s;
    s.order.reserve(static_cast<std::size_t>(g.n));
    for (int step = 0; step < g.n; ++step) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v) {
            if (c.is_colored(v)) continue;
            if (pick == 0 || sat[v] > sat[pick] ||
                (sat[v] == sat[pick] && rdeg[v] > rdeg[pick]))
                pick = v;
        }
        const int col = color_vertex(g, pick, c);
        c.color[pick] = col;
        c.used_colors = std::max(c.used_colors, col);
        s.order.push_back(pick);
        for (int u : g.adj[pick]) {
            --rdeg[u];
            if (c.is_colored(u)) continue;
            auto& sc = seen[u];
            if (std::find(sc.begin(), sc.end(), col) == sc.end()) {
                sc.push_back(col);
                ++sat[u];
            }
        }
    }
    return {std::move(s), std::move(c)};
}

namespace {

VertexSequence static_descending_degree(const Graph& g) {
    VertexSequence s;
    for (int v = 1; v <= g.n; ++v) s.order.push_back(v);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return s;
}

VertexSequence adaptive_descending_degree(const Graph& g) {
    std::vector<int> rdeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) rdeg[v] = g.degree(v);
    std::vector<char> placed(static_cast<std::size_t>(g.n) + 1, 0);
    VertexSequence s;
    for (int step = 0; step < g.n; ++step) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v)
            if (!placed[v] && (pick == 0 || rdeg[v] > rdeg[pick])) pick = v;
        placed[pick] = 1;
        s.order.push_back(pick);
        for (int u : g.adj[pick])
            if (!placed[u]) --rdeg[u];
    }
    return s;
}

VertexSequence smallest_degree_last(const Graph& g) {
    std::vector<int> rdeg(static_cast<std::size_t>(g.n) + 1, 0);
    for (int v = 1; v <= g.n; ++v) rdeg[v] = g.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(g.n) + 1, 0);
    VertexSequence s;
    s.order.assign(static_cast<std::size_t>(g.n), 0);
    for (int pos = g.n; pos >= 1; --pos) {
        int pick = 0;
        for (int v = 1; v <= g.n; ++v)
            if (!removed[v] && (pick == 0 || rdeg[v] < rdeg[pick])) pick = v;
        removed[pick] = 1;
        s.order[static_cast<std::size_t>(pos) - 1] = pick;
        for (int u : g.adj[pick])
            if (!removed[u]) --rdeg[u];
    }
    return s;
}

}  // namespace

PlainCriterion plain_criterion_from_name(const std::string& name) {
    if (name == "mdf" || name == "max_degree_first") return PlainCriterion::max_degree_first;
    if (name == "amd" || name == "adaptive_max_degree")
        return PlainCriterion::adaptive_max_degree;
    if (name == "sdl" || name == "smallest_degree_last")
        return PlainCriterion::smallest_degree_last;
    throw std::invalid_argument("unknown plain criterion: " + name);
}

VertexSequence plain_greedy_sequence(const Graph& g, PlainCriterion criterion) {
    switch (criterion) {
        case PlainCriterion::max_degree_first: return static_descending_degree(g);
        case PlainCriterion::adaptive_max_degree: return adaptive_descending_degree(g);
        case PlainCriterion::smallest_degree_last: return smallest_degree_last(g);
    }
    throw std::invalid_argument("unknown plain criterion");
}

std::pair<VertexSequence, Coloring> warm_start(const Graph& g, Mode mode) {
    std::vector<std::pair<VertexSequence, Coloring>> candidates;
    auto add = [&](VertexSequence s) {
        Coloring c = first_fit(g, s);
        candidates.emplace_back(std::move(s), std::move(c));
    };
    if (mode == Mode::connected) {
        require_connected(g, "warm_start");
        add(connected_smallest_degree_first(g));
        add(connected_max_degree_first(g));
        candidates.push_back(dsatur_sequence(g));
    } else {
        add(plain_greedy_sequence(g, PlainCriterion::max_degree_first));
        add(plain_greedy_sequence(g, PlainCriterion::adaptive_max_degree));
        add(plain_greedy_sequence(g, PlainCriterion::smallest_degree_last));
        if (is_connected(g)) candidates.push_back(dsatur_sequence(g));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].second.used_colors > candidates[best].second.used_colors) best = i;
    return candidates[best];
}

}  // namespace cgc
