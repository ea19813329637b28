// Greedy sequence constructors used as warm starts and baselines, in connected
// and plain (unconstrained-order) variants. All ties break on minimum vertex index.

#ifndef CGC_HEURISTICS_HPP
#define CGC_HEURISTICS_HPP

#include <utility>

#include "cgc/coloring.hpp"
#include "cgc/graph.hpp"

namespace cgc {

enum class Mode { connected, plain };

const char* mode_name(Mode m);

// Start at a global minimum-degree vertex; repeatedly take, among reached
// vertices, one of minimum degree in the shrinking residual graph, then delete
// it from the residual graph. Requires a connected graph.
VertexSequence connected_smallest_degree_first(const Graph& g);

// Start at a global maximum-degree vertex; repeatedly take the highest-degree
// vertex (static degrees) adjacent to the chosen prefix. Requires connectivity.
VertexSequence connected_max_degree_first(const Graph& g);

// DSatur: start at a maximum-degree vertex; then pick the vertex with the most
// distinct neighbor colors, ties by residual degree, ties by index. On a
// connected graph the sequence is connected (asserted by callers/tests, and
// returned alongside its first-fit coloring).
std::pair<VertexSequence, Coloring> dsatur_sequence(const Graph& g);

enum class PlainCriterion { max_degree_first, adaptive_max_degree, smallest_degree_last };

PlainCriterion plain_criterion_from_name(const std::string& name);

// Orderings that ignore connectivity: static descending degree, residual
// descending degree (vertex removed once placed), or smallest-degree-last
// (positions filled n..1 with the residual minimum-degree vertex).
VertexSequence plain_greedy_sequence(const Graph& g, PlainCriterion criterion);

// Best (most colors) of the mode's heuristic set; ties keep the first listed.
// connected: CMinDF, CMDF, DSatur. plain: max_degree_first, adaptive_max_degree,
// smallest_degree_last, plus DSatur when the graph happens to be connected.
std::pair<VertexSequence, Coloring> warm_start(const Graph& g, Mode mode);

}  // namespace cgc

#endif
