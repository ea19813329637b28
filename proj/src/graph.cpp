#include "cgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "cgc/rng.hpp"

namespace cgc {

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 1; u <= n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 1) throw std::invalid_argument("make_graph: vertex count must be >= 1");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edge_list) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("make_graph: endpoint outside 1..n");
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.m = 0;
    for (int v = 1; v <= n; ++v) {
        auto& a = g.adj[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
    }
    g.m /= 2;
    return g;
}

bool validate_graph(const Graph& g) {
    if (g.n < 1 || g.adj.size() != static_cast<std::size_t>(g.n) + 1) return false;
    long long deg_sum = 0;
    for (int v = 1; v <= g.n; ++v) {
        const auto& a = g.adj[v];
        if (!std::is_sorted(a.begin(), a.end())) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
        for (int u : a) {
            if (u < 1 || u > g.n || u == v) return false;
            if (!g.has_edge(u, v)) return false;  // symmetry
        }
        deg_sum += static_cast<long long>(a.size());
    }
    return deg_sum == 2 * g.m;
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::random_uniform: return "rand";
        case GraphClass::geometric: return "geo";
        case GraphClass::bipartite: return "bip";
        case GraphClass::complement_bipartite: return "cbip";
    }
    return "?";
}

GraphClass graph_class_from_name(const std::string& name) {
    if (name == "rand" || name == "random") return GraphClass::random_uniform;
    if (name == "geo" || name == "geometric") return GraphClass::geometric;
    if (name == "bip" || name == "bipartite") return GraphClass::bipartite;
    if (name == "cbip" || name == "complement_bipartite")
        return GraphClass::complement_bipartite;
    throw std::invalid_argument("unknown graph class: " + name);
}

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long line_no = 0;
    std::vector<std::pair<int, int>> edge_list;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        // tolerate trailing CR from DOS-encoded benchmark files
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long long hn = 0, hm = 0;
            if (!(ls >> fmt >> hn >> hm) || fmt != "edge" || hn < 1)
                fail("malformed problem line (expected 'p edge <n> <m>')");
            if (n >= 0) fail("duplicate problem line");
            n = static_cast<int>(hn);
        } else if (tag == "e") {
            int u = 0, v = 0;
            if (n < 0) fail("edge before problem line");
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                fail("vertex index outside 1.." + std::to_string(n));
            if (u == v) fail("self-loop");
            edge_list.emplace_back(u, v);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) {
        line_no = 0;
        fail("missing problem line");
    }
    return make_graph(n, edge_list);
}

Graph parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_dimacs(in);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.m << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

namespace {

// Draw order for the generators (part of the determinism contract):
//   random:    one uniform01 per unordered pair (u,v), u ascending, then v ascending
//   geometric: per vertex 1..n, x then y
//   bipartite: one uniform01 per cross pair, u over part A ascending, v over part B ascending
// complement_bipartite consumes exactly the draws of bipartite with the same spec.

Graph generate_random(int n, double eta, Rng& rng) {
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.uniform01() < eta) edge_list.emplace_back(u, v);
    return make_graph(n, edge_list);
}

Graph generate_geometric(int n, double eta, Rng& rng) {
    std::vector<double> x(static_cast<std::size_t>(n) + 1), y(x);
    for (int v = 1; v <= n; ++v) {
        x[v] = rng.uniform01();
        y[v] = rng.uniform01();
    }
    std::vector<std::pair<int, int>> edge_list;
    const double r2 = eta * eta;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const double dx = x[u] - x[v], dy = y[u] - y[v];
            if (dx * dx + dy * dy <= r2) edge_list.emplace_back(u, v);
        }
    return make_graph(n, edge_list);
}

Graph generate_bipartite(int n, double eta, Rng& rng) {
    const int a = (n + 1) / 2;  // part A = 1..ceil(n/2), part B = rest
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= n; ++v)
            if (rng.uniform01() < eta) edge_list.emplace_back(u, v);
    return make_graph(n, edge_list);
}

}  // namespace

Graph generate(const InstanceSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (spec.eta <= 0.0) throw std::invalid_argument("generate: eta must be positive");
    // eta is a probability except for geometric, where it is a distance threshold
    // and may exceed 1 (threshold >= sqrt(2) yields a complete graph).
    if (spec.cls != GraphClass::geometric && spec.eta > 1.0)
        throw std::invalid_argument("generate: eta must be in (0,1] for this class");
    Rng rng(spec.seed);
    switch (spec.cls) {
        case GraphClass::random_uniform: return generate_random(spec.n, spec.eta, rng);
        case GraphClass::geometric: return generate_geometric(spec.n, spec.eta, rng);
        case GraphClass::bipartite: return generate_bipartite(spec.n, spec.eta, rng);
        case GraphClass::complement_bipartite:
            return complement(generate_bipartite(spec.n, spec.eta, rng));
    }
    throw std::invalid_argument("generate: unknown class");
}

Graph complement(const Graph& g) {
    Graph out;
    out.n = g.n;
    out.adj.assign(static_cast<std::size_t>(g.n) + 1, {});
    out.m = 0;
    for (int v = 1; v <= g.n; ++v) {
        const auto& a = g.adj[v];
        std::size_t i = 0;
        for (int u = 1; u <= g.n; ++u) {
            while (i < a.size() && a[i] < u) ++i;
            if (u == v || (i < a.size() && a[i] == u)) continue;
            out.adj[v].push_back(u);
        }
        out.m += static_cast<long long>(out.adj[v].size());
    }
    out.m /= 2;
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 1; s <= g.n; ++s) {
        if (comp[s]) continue;
        out.emplace_back();
        const int id = static_cast<int>(out.size());
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int u : g.adj[v])
                if (!comp[u]) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    // components are discovered in order of their minimum vertex already
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph connectify(const Graph& g, int* edges_added) {
    auto comps = connected_components(g);
    if (edges_added) *edges_added = static_cast<int>(comps.size()) - 1;
    if (comps.size() <= 1) return g;
    std::vector<int> reps;
    for (const auto& comp : comps) {
        int rep = comp.front();
        for (int v : comp)
            if (g.degree(v) > g.degree(rep) || (g.degree(v) == g.degree(rep) && v < rep))
                rep = v;
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());
    auto edge_list = g.edges();
    for (std::size_t i = 0; i + 1 < reps.size(); ++i)
        edge_list.emplace_back(reps[i], reps[i + 1]);
    return make_graph(g.n, edge_list);
}

double density(const Graph& g) {
    if (g.n < 2) throw std::domain_error("density: needs at least 2 vertices");
    return 2.0 * static_cast<double>(g.m) /
           (static_cast<double>(g.n) * static_cast<double>(g.n - 1));
}

}  // namespace cgc
