// Brute-force oracles for small graphs: connected Grundy number, Grundy number,
// and chromatic number. Ground truth for the property tests.

#ifndef CGC_EXACT_HPP
#define CGC_EXACT_HPP

#include <stdexcept>

#include "cgc/coloring.hpp"
#include "cgc/graph.hpp"

namespace cgc {

// Thrown when an instance exceeds an oracle's vertex budget. The budgets are
// hard refusals: the oracles never fall back to a heuristic.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExactResult {
    int value = 0;
    VertexSequence witness;  // a sequence achieving value
};

// Max first-fit colors over all connected sequences (DFS over connected
// prefixes, pruned by the combinatorial upper bound and by the optimistic
// colors-remaining count). Requires a connected graph and n <= limit.
ExactResult brute_gamma_c(const Graph& g, int limit = 10);

// Max first-fit colors over all vertex permutations. n <= limit.
ExactResult brute_gamma(const Graph& g, int limit = 9);

// Minimum k admitting a proper k-coloring (backtracking). n <= limit.
int brute_chromatic(const Graph& g, int limit = 12);

// Per-vertex maximum over all permutations of the first-fit color the vertex
// receives (unpruned enumeration; supports the per-vertex cap soundness test).
// n <= limit.
std::vector<int> brute_vertex_color_max(const Graph& g, int limit = 8);

}  // namespace cgc

#endif
