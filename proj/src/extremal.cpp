#include "maxline/extremal.hpp"

#include <string>

namespace maxline {

Digraph gen_o(int m) {
    if (m < 2) throw InvalidSizeError("gen_o requires m >= 2, got " + std::to_string(m));
    const int p = m / 2;
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (int v = 1; v <= p; ++v) {
        arcs.push_back({0, v});
        arcs.push_back({v, 0});
    }
    int n = p + 1;
    if (m % 2 == 1) {
        arcs.push_back({n, 0});
        ++n;
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph gen_max_line(int m) {
    if (m < 2)
        throw InvalidSizeError("gen_max_line requires m >= 2, got " + std::to_string(m));
    const int p = m / 2;             // |B|
    const int a = p + (m % 2);       // |A|; the odd case gets one extra A-vertex
    std::vector<Arc> arcs;
    arcs.reserve(a * p + p);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < p; ++j) arcs.push_back({i, a + j});
    for (int i = 0; i < p; ++i) arcs.push_back({a + i, i});
    return Digraph::from_arcs(a + p, arcs);
}

Digraph gen_star(const StarSpec& spec) {
    const int x = spec.incoming, y = spec.outgoing, c = spec.circuits;
    if (x < 0 || y < 0 || x + y < 1 || c < 0 || c > std::min(x, y))
        throw InvalidSpecError("invalid star spec x=" + std::to_string(x) +
                               " y=" + std::to_string(y) + " c=" + std::to_string(c));
    std::vector<Arc> arcs;
    arcs.reserve(x + y);
    int v = 1;
    for (int i = 0; i < c; ++i, ++v) {
        arcs.push_back({v, 0});
        arcs.push_back({0, v});
    }
    for (int i = 0; i < x - c; ++i, ++v) arcs.push_back({v, 0});
    for (int i = 0; i < y - c; ++i, ++v) arcs.push_back({0, v});
    return Digraph::from_arcs(v, arcs);
}

bool check_arc_degree_bound(const Digraph& g) {
    const int m = g.arc_count();
    const int threshold = (m % 2 == 0) ? m / 2 + 1 : (m - 1) / 2;
    for (const Arc& a : g.arcs())
        if (g.in_degree(a.tail) + g.out_degree(a.head) < threshold) return false;
    return true;
}

}  // namespace maxline
