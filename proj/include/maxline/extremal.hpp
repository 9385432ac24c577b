#pragma once

#include "maxline/digraph.hpp"

namespace maxline {

/// Star digraph shape: a center with `incoming` arcs in, `outgoing` arcs
/// out, of which `circuits` in/out pairs share an outer vertex (forming
/// 2-circuits). Requires incoming + outgoing >= 1 and
/// 0 <= circuits <= min(incoming, outgoing).
struct StarSpec {
    int incoming = 0;   // x
    int outgoing = 0;   // y
    int circuits = 0;   // c
};

/// The extremal root with m arcs: vertex 0 is the center, vertices
/// 1..floor(m/2) each form a 2-circuit with it, and for odd m one extra
/// vertex sends a single arc into the center. phi equals max_arcs(m).
Digraph gen_o(int m);

/// The extremal line digraph of order m, built directly: complete oriented
/// bipartite A -> B with |B| = floor(m/2), |A| = |B| (+1 if m odd), plus a
/// return arc b_i -> a_i for each b_i. Arc count equals max_arcs(m).
/// Independent of line_digraph(gen_o(m)), so the two constructions can
/// cross-validate each other.
Digraph gen_max_line(int m);

/// Star digraph per the spec; phi = x*y + c.
Digraph gen_star(const StarSpec& spec);

/// True iff every arc (u, v) satisfies in_degree(u) + out_degree(v) >=
/// m/2 + 1 (m even) or (m-1)/2 (m odd), a necessary condition for
/// phi-optimality.
bool check_arc_degree_bound(const Digraph& g);

}  // namespace maxline
