// Simple undirected graph with 1-based vertices, DIMACS I/O, the four benchmark
// instance generators, and the component-connection procedure.

#ifndef CGC_GRAPH_HPP
#define CGC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertices are 1..n (index 0 of adj is unused). Adjacency lists are sorted and
// duplicate-free; u in adj(v) iff v in adj(u); no self-loops.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;  // size n+1

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;  // binary search, O(log deg)
    // Edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
};

// Builds a graph from an edge list; collapses duplicates and both orientations.
// Throws std::invalid_argument on self-loops or out-of-range endpoints.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

// Consistency check used by tests and after every parse/generate: symmetry,
// sortedness, no self-loops, no duplicates, m consistent with adjacency sizes.
bool validate_graph(const Graph& g);

enum class GraphClass { random_uniform, geometric, bipartite, complement_bipartite };

const char* graph_class_name(GraphClass c);
GraphClass graph_class_from_name(const std::string& name);  // rand/geo/bip/cbip

struct InstanceSpec {
    GraphClass cls = GraphClass::random_uniform;
    int n = 1;
    double eta = 0.5;  // edge probability, or distance threshold for geometric
    std::uint64_t seed = 0;
};

// DIMACS .col/.clq subset: 'c' comments, one 'p edge <n> <m>' header, 'e u v'
// lines. Throws ParseError naming the offending line on malformed input,
// out-of-range endpoints, or self-loops. Duplicate edges collapse silently.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_file(const std::string& path);
std::string write_dimacs(const Graph& g);

// Deterministic for a fixed spec; draw order is documented in the .cpp so the
// byte-identical-instances guarantee is checkable.
Graph generate(const InstanceSpec& spec);

Graph complement(const Graph& g);

// Maximal connected vertex sets, each sorted ascending, ordered by minimum index.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Connects a disconnected graph: per component pick the max-degree vertex
// (ties: lowest index), order the representatives by index, add a path edge
// between consecutive ones. Connected input is returned unchanged.
// edges_added (optional out) receives #components - 1, or 0.
Graph connectify(const Graph& g, int* edges_added = nullptr);

// 2m / (n(n-1)); throws std::domain_error for n < 2.
double density(const Graph& g);

}  // namespace cgc

#endif
