// First-fit coloring over vertex sequences, connectivity checking, Grundy-property
// validation, and the positional index used by the local search.

#ifndef CGC_COLORING_HPP
#define CGC_COLORING_HPP

#include <string>
#include <vector>

#include "cgc/graph.hpp"

namespace cgc {

// Marks a vertex that has not been assigned a color yet. Colors are 1-based.
inline constexpr int kUncolored = 0;

// A permutation of 1..n. order[i] is the vertex at position i+1 (positions are
// 1-based in all of the position arithmetic below).
struct VertexSequence {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int at_position(int pos) const { return order[static_cast<std::size_t>(pos) - 1]; }
};

bool is_permutation(const VertexSequence& s, int n);

struct Coloring {
    std::vector<int> color;  // size n+1, index 0 unused; kUncolored = not yet colored
    int used_colors = 0;     // max assigned color

    bool is_colored(int v) const { return color[v] != kUncolored; }
};

Coloring empty_coloring(int n);

// Positional view of a sequence:
//   p(v)  = position of v in S (1-based)
//   f(v)  = position of the first neighbor of v in S; 0 when v has no neighbor
//           before or after (f is only meaningful when fc(v) >= 1 for the gates,
//           and is the minimum position over all of N(v) as in the source algorithm)
//   fc(v) = number of neighbors of v placed before v in S
// S is connected iff fc(v) >= 1 for every v with p(v) >= 2.
struct PositionIndex {
    std::vector<int> p, f, fc;  // size n+1
};

// Lowest positive color absent among v's colored neighbors; does not mutate.
int color_vertex(const Graph& g, int v, const Coloring& partial);

// Colors s in order via color_vertex. O(n+m).
Coloring first_fit(const Graph& g, const VertexSequence& s);

// True iff every vertex at position >= 2 has a neighbor at an earlier position.
bool is_connected_sequence(const Graph& g, const VertexSequence& s);

// True iff the (fully assigned) coloring is proper and every vertex colored k
// has neighbors of every color k' < k.
bool validate_grundy(const Graph& g, const Coloring& c);

// One O(n+m) traversal.
PositionIndex build_position_index(const Graph& g, const VertexSequence& s);

// "v <vertex> <color>" lines, one per vertex.
std::string coloring_to_dimacs(const Coloring& c);

}  // namespace cgc

#endif
