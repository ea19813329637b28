// Relocation neighborhood for sequence colorings: connectivity-preserving move
// gates, incremental recoloring after a move, and a first-improvement search.

#ifndef CGC_LOCALSEARCH_HPP
#define CGC_LOCALSEARCH_HPP

#include <functional>

#include "cgc/brkga.hpp"
#include "cgc/coloring.hpp"
#include "cgc/graph.hpp"
#include "cgc/heuristics.hpp"

namespace cgc {

// Moving v into u's former position keeps the sequence connected when u leads
// the sequence or some neighbor of v sits before u. Sufficient, not necessary.
// pre: uv in E, p(u) < p(v), s connected.
bool can_move_left(const Graph& g, const PositionIndex& idx, int u, int v);

// Moving v right to u's former position keeps the sequence connected when every
// neighbor w of v inside the vacated window (p(v) < p(w) <= p(u)) keeps an
// earlier anchor: f(w) < p(v), or f(w) = p(v) with a second preceding neighbor.
// pre: uv in E, p(v) < p(u), s connected.
bool can_move_right(const Graph& g, const PositionIndex& idx, int u, int v);

struct MoveResult {
    VertexSequence sequence;
    Coloring coloring;
    int value = 0;
};

// Relocates v to n_position (block shift, other relative order kept) and
// recolors: positions <= f_position are copied verbatim, then vertices are
// copied while provably unchanged (outside the critical window or not in N[v]
// before any change) and first-fit recolored from the first detected change on.
// Output coloring equals first_fit over the moved sequence.
// pre: f_position choices follow the search loop (p(u)-1 left, p(v)-1 right).
MoveResult color_sequence(const Graph& g, const VertexSequence& s, const Coloring& colors,
                          int v, int n_position, int f_position);

// Called between vertex iterations; return true to stop early. Empty = run to
// a local optimum.
using StopCheck = std::function<bool()>;

struct LocalSearchResult {
    VertexSequence sequence;
    Coloring coloring;
    int value = 0;
    long long accepted_moves = 0;
};

// First-improvement relocation search from a decoded solution: scan v ascending
// then u in N(v) ascending, try the gated left/right move of v to p(u), accept
// any strict value gain and restart the scan. Plain mode skips both gates
// (connectivity is not maintained). Returns a fixpoint unless stopped early.
LocalSearchResult local_search(const Graph& g, const VertexSequence& s, Mode mode,
                               const StopCheck& stop = {});

// Decode-then-search form used by the genetic algorithm and the CLI.
LocalSearchResult local_search(const Graph& g, const RandomKeyVector& x, Mode mode,
                               const StopCheck& stop = {});

}  // namespace cgc

#endif
