#include "maxline/line_transform.hpp"

namespace maxline {

LineDigraph line_digraph(const Digraph& g) {
    const std::vector<Arc>& labels = g.arcs();
    const int m = static_cast<int>(labels.size());

    // Arcs grouped by tail: arc i feeds every arc whose tail is labels[i].head.
    std::vector<std::vector<int>> by_tail(g.vertex_count());
    for (int i = 0; i < m; ++i) by_tail[labels[i].tail].push_back(i);

    std::vector<Arc> line_arcs;
    for (int i = 0; i < m; ++i)
        for (int j : by_tail[labels[i].head])
            if (i != j) line_arcs.push_back({i, j});

    return {Digraph::from_arcs(m, line_arcs), labels};
}

long long phi(const Digraph& g) {
    long long sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        sum += static_cast<long long>(g.out_degree(v)) * g.in_degree(v);
    return sum;
}

long long max_arcs(long long m) {
    if (m < 0) throw InvalidSizeError("arc count must be non-negative");
    if (m % 2 == 0) {
        const long long h = m / 2;
        return h * h + h;
    }
    const long long h = (m - 1) / 2;
    return h * h + (m - 1);
}

}  // namespace maxline
