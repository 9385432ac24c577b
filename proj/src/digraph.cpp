#include "maxline/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace maxline {

Digraph Digraph::from_arcs(int n, std::span<const Arc> arcs) {
    if (n < 0) throw InvalidSizeError("vertex count must be non-negative");
    Digraph g;
    g.n_ = n;
    g.arcs_.assign(arcs.begin(), arcs.end());
    for (const Arc& a : g.arcs_) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw VertexOutOfRangeError("arc (" + std::to_string(a.tail) + "," +
                                        std::to_string(a.head) +
                                        ") out of range for n=" + std::to_string(n));
        if (a.tail == a.head)
            throw LoopArcError("loop arc (" + std::to_string(a.tail) + "," +
                               std::to_string(a.head) + ")");
    }
    std::sort(g.arcs_.begin(), g.arcs_.end());
    if (std::adjacent_find(g.arcs_.begin(), g.arcs_.end()) != g.arcs_.end())
        throw DuplicateArcError("duplicate arc in input");
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (const Arc& a : g.arcs_) {
        g.out_[a.tail].push_back(a.head);
        g.in_[a.head].push_back(a.tail);
    }
    // out_ lists are sorted already (arcs_ is sorted); in_ lists need it
    for (auto& v : g.in_) std::sort(v.begin(), v.end());
    return g;
}

Digraph Digraph::from_arcs(int n, std::initializer_list<Arc> arcs) {
    return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexOutOfRangeError("vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n_));
}

std::span<const int> Digraph::out_neighbors(int v) const {
    check_vertex(v);
    return out_[v];
}

std::span<const int> Digraph::in_neighbors(int v) const {
    check_vertex(v);
    return in_[v];
}

bool Digraph::has_arc(int tail, int head) const {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_) return false;
    return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

int Digraph::in_degree(int v) const {
    check_vertex(v);
    return static_cast<int>(in_[v].size());
}

int Digraph::out_degree(int v) const {
    check_vertex(v);
    return static_cast<int>(out_[v].size());
}

std::pair<int, int> Digraph::degrees(int v) const {
    check_vertex(v);
    return {static_cast<int>(in_[v].size()), static_cast<int>(out_[v].size())};
}

Digraph Digraph::transpose() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back({a.head, a.tail});
    return from_arcs(n_, rev);
}

Digraph Digraph::remove_vertex(int v) const {
    check_vertex(v);
    std::vector<Arc> kept;
    kept.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        if (a.tail == v || a.head == v) continue;
        kept.push_back({a.tail - (a.tail > v ? 1 : 0), a.head - (a.head > v ? 1 : 0)});
    }
    return from_arcs(n_ - 1, kept);
}

Digraph Digraph::remove_arc(Arc a) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
    if (it == arcs_.end() || *it != a)
        throw ArcNotPresentError("arc (" + std::to_string(a.tail) + "," +
                                 std::to_string(a.head) + ") not present");
    std::vector<Arc> kept(arcs_.begin(), it);
    kept.insert(kept.end(), it + 1, arcs_.end());
    return from_arcs(n_, kept);
}

bool Digraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const Arc& a : arcs_) {
        int ra = find(a.tail), rb = find(a.head);
        if (ra != rb) parent[ra] = rb;
    }
    int root = find(0);
    for (int v = 1; v < n_; ++v)
        if (find(v) != root) return false;
    return true;
}

std::vector<std::pair<int, int>> Digraph::two_circuits() const {
    std::vector<std::pair<int, int>> pairs;
    for (const Arc& a : arcs_)
        if (a.tail < a.head && has_arc(a.head, a.tail))
            pairs.emplace_back(a.tail, a.head);
    return pairs;  // arcs_ is sorted, so pairs come out sorted
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    std::vector<Arc> arcs = a.arcs();
    const int shift = a.vertex_count();
    for (const Arc& arc : b.arcs()) arcs.push_back({arc.tail + shift, arc.head + shift});
    return Digraph::from_arcs(shift + b.vertex_count(), arcs);
}

}  // namespace maxline
