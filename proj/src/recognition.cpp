#include "maxline/recognition.hpp"

#include <algorithm>
#include <numeric>

namespace maxline {

const char* pattern_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::Eight: return "Eight";
        case PatternKind::Shortcut: return "Shortcut";
        case PatternKind::Deviation: return "Deviation";
        case PatternKind::BadZ: return "BadZ";
    }
    return "?";
}

std::optional<PatternWitness> find_eight(const Digraph& h) {
    // One vertex on two distinct 2-circuits.
    for (int v = 0; v < h.vertex_count(); ++v) {
        int first = -1;
        for (int a : h.out_neighbors(v)) {
            if (!h.has_arc(a, v)) continue;
            if (first < 0) {
                first = a;
            } else {
                return PatternWitness{PatternKind::Eight, {v, first, a}};
            }
        }
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_shortcut(const Digraph& h) {
    // Transitive triangle (x,y),(y,z),(x,z); arcs being loop-free makes
    // the three vertices distinct automatically.
    for (int x = 0; x < h.vertex_count(); ++x)
        for (int y : h.out_neighbors(x))
            for (int z : h.out_neighbors(y))
                if (z != x && h.has_arc(x, z))
                    return PatternWitness{PatternKind::Shortcut, {x, y, z}};
    return std::nullopt;
}

std::optional<PatternWitness> find_deviation(const Digraph& h) {
    // Two internally disjoint 2-paths u -> {a,b} -> v with u != v. The
    // u == v case is an Eight, handled by its own detector.
    for (int u = 0; u < h.vertex_count(); ++u) {
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (u == v) continue;
            int first = -1;
            for (int mid : h.out_neighbors(u)) {
                if (mid == v || !h.has_arc(mid, v)) continue;
                if (first < 0) {
                    first = mid;
                } else {
                    return PatternWitness{PatternKind::Deviation, {u, first, mid, v}};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<PatternWitness> find_bad_z(const Digraph& h) {
    // Z on distinct a,b,c,d: arcs (a,c),(b,c),(b,d). Bad when the K_{2,2}
    // completion (a,d) is missing. a == d would be a Shortcut instead.
    for (int a = 0; a < h.vertex_count(); ++a)
        for (int c : h.out_neighbors(a))
            for (int b : h.in_neighbors(c)) {
                if (b == a) continue;
                for (int d : h.out_neighbors(b)) {
                    if (d == c || d == a) continue;
                    if (!h.has_arc(a, d))
                        return PatternWitness{PatternKind::BadZ, {a, b, c, d}};
                }
            }
    return std::nullopt;
}

RecognitionVerdict is_line_digraph(const Digraph& h) {
    if (auto w = find_eight(h)) return {false, w};
    if (auto w = find_shortcut(h)) return {false, w};
    if (auto w = find_deviation(h)) return {false, w};
    if (auto w = find_bad_z(h)) return {false, w};
    return {true, std::nullopt};
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Digraph reconstruct_root(const Digraph& h) {
    RecognitionVerdict verdict = is_line_digraph(h);
    if (!verdict.is_line)
        throw NotLineDigraphError(
            std::string("not a line digraph: contains ") + pattern_name(verdict.witness->kind),
            *verdict.witness);

    const int m = h.vertex_count();
    // Endpoint symbols: tail of vertex i is 2i, head is 2i+1.
    std::vector<int> parent(2 * m);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Arc& a : h.arcs()) {
        int x = uf_find(parent, 2 * a.tail + 1);  // head symbol of a.tail
        int y = uf_find(parent, 2 * a.head);      // tail symbol of a.head
        if (x != y) parent[x] = y;
    }

    // Number classes by first appearance in symbol order, for determinism.
    std::vector<int> class_id(2 * m, -1);
    int next = 0;
    std::vector<Arc> root_arcs;
    root_arcs.reserve(m);
    for (int s = 0; s < 2 * m; ++s) {
        int r = uf_find(parent, s);
        if (class_id[r] < 0) class_id[r] = next++;
    }
    for (int i = 0; i < m; ++i) {
        int tail = class_id[uf_find(parent, 2 * i)];
        int head = class_id[uf_find(parent, 2 * i + 1)];
        if (tail == head)
            throw InternalInconsistencyError("reconstruction produced a loop");
        root_arcs.push_back({tail, head});
    }
    std::vector<Arc> sorted = root_arcs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InternalInconsistencyError("reconstruction produced a duplicate arc");
    return Digraph::from_arcs(next, root_arcs);
}

}  // namespace maxline
