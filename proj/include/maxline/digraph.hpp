#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "maxline/errors.hpp"

namespace maxline {

/// Ordered pair of distinct vertices.
struct Arc {
    int tail = 0;
    int head = 0;

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Simple loop-free directed graph on dense vertex indices 0..n-1.
///
/// Immutable after construction; every operation returns a new value, so
/// instances can be shared freely across threads. 2-circuits (both (u,v)
/// and (v,u)) are allowed; loops and parallel arcs are rejected.
class Digraph {
public:
    Digraph() = default;

    /// Builds a digraph from an arbitrary-order arc list. The internal arc
    /// order is always lexicographic regardless of input order.
    static Digraph from_arcs(int n, std::span<const Arc> arcs);
    static Digraph from_arcs(int n, std::initializer_list<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Sorted successor / predecessor lists.
    std::span<const int> out_neighbors(int v) const;
    std::span<const int> in_neighbors(int v) const;

    bool has_arc(int tail, int head) const;

    int in_degree(int v) const;
    int out_degree(int v) const;
    /// (in_degree, out_degree).
    std::pair<int, int> degrees(int v) const;

    /// Every arc reversed.
    Digraph transpose() const;

    /// Deletes the vertex and all incident arcs; vertices above it shift
    /// down by one so indices stay dense.
    Digraph remove_vertex(int v) const;

    /// Deletes exactly that arc. Throws ArcNotPresentError if absent.
    Digraph remove_arc(Arc a) const;

    /// Weak connectivity (arc directions ignored). Graphs on 0 or 1
    /// vertices count as connected.
    bool is_connected() const;

    /// All pairs {u, v}, u < v, with both (u,v) and (v,u) present, sorted.
    std::vector<std::pair<int, int>> two_circuits() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted lexicographically
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Both graphs side by side, the second one's indices shifted up.
Digraph disjoint_union(const Digraph& a, const Digraph& b);

}  // namespace maxline
