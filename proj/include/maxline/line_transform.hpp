#pragma once

#include <vector>

#include "maxline/digraph.hpp"

namespace maxline {

/// The line digraph L(G) together with the root arc labelling each vertex.
/// Vertex i of `graph` is root arc `labels[i]`; labels follow the root's
/// lexicographic arc order. Arc (i, j) exists iff labels[i].head ==
/// labels[j].tail and i != j.
struct LineDigraph {
    Digraph graph;
    std::vector<Arc> labels;
};

LineDigraph line_digraph(const Digraph& g);

/// Sum over vertices of out_degree * in_degree; equals the arc count of
/// line_digraph(g).graph.
long long phi(const Digraph& g);

/// Maximum arc count of a line digraph of order m: (m/2)^2 + m/2 for even
/// m, ((m-1)/2)^2 + (m-1) for odd m. Extends to m in {0, 1} with value 0.
long long max_arcs(long long m);

}  // namespace maxline
