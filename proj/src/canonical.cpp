#include "maxline/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>

namespace maxline {

namespace {

constexpr int kMaxCanonicalVertices = 16;

// Search state for the lexicographic-minimum relabeling. Labels are
// assigned in increasing order; a branch survives only while the best
// completion it could still reach (optimistic lower bound) beats the
// incumbent arc list. Vertices whose swap is an automorphism ("twins")
// are interchangeable, so only one per twin class is tried at each node.
struct CanonSearch {
    int n = 0;
    int m = 0;
    std::array<uint32_t, kMaxCanonicalVertices> out{};
    std::array<uint32_t, kMaxCanonicalVertices> in{};
    std::array<std::vector<int>, kMaxCanonicalVertices> out_list;
    std::array<int, kMaxCanonicalVertices> twin_root{};
    std::vector<int> try_order;                 // static candidate order
    std::array<int, kMaxCanonicalVertices> label{};   // old vertex -> label, -1 if none
    std::array<int, kMaxCanonicalVertices> chosen{};  // label -> old vertex
    std::vector<Arc> best;

    bool has_arc(int u, int v) const { return (out[u] >> v) & 1u; }

    int find_twin_root(int v) {
        while (twin_root[v] != v) {
            twin_root[v] = twin_root[twin_root[v]];
            v = twin_root[v];
        }
        return v;
    }

    void compute_twins() {
        std::iota(twin_root.begin(), twin_root.begin() + n, 0);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                const uint32_t mask = ~((1u << u) | (1u << w));
                if ((out[u] & mask) == (out[w] & mask) &&
                    (in[u] & mask) == (in[w] & mask) &&
                    has_arc(u, w) == has_arc(w, u)) {
                    int ru = find_twin_root(u), rw = find_twin_root(w);
                    if (ru != rw) twin_root[std::max(ru, rw)] = std::min(ru, rw);
                }
            }
    }

    // Lexicographic compare of the optimistic completion against `best`,
    // given `depth` assigned labels. Known arcs among assigned vertices are
    // exact; an arc from assigned tail j to an unassigned head is bounded
    // below by heads depth, depth+1, ...; arcs with unassigned tails by
    // (depth, 0). Returns true iff some completion could still improve.
    bool can_improve(int depth) const {
        if (best.empty()) return true;
        int pos = 0;
        int tail_arcs_seen = 0;
        std::array<int, kMaxCanonicalVertices> heads{};
        for (int j = 0; j < depth; ++j) {
            const int v = chosen[j];
            int known = 0;
            for (int x : out_list[v])
                if (label[x] >= 0) heads[known++] = label[x];
            std::sort(heads.begin(), heads.begin() + known);
            const int pending = static_cast<int>(out_list[v].size()) - known;
            tail_arcs_seen += known + pending;
            for (int i = 0; i < known + pending; ++i, ++pos) {
                const Arc lb{j, i < known ? heads[i] : depth + (i - known)};
                if (lb != best[pos]) return lb < best[pos];
            }
        }
        for (int r = tail_arcs_seen; r < m; ++r, ++pos) {
            const Arc lb{depth, 0};
            if (lb != best[pos]) return lb < best[pos];
        }
        return false;  // equal lower bound cannot strictly improve
    }

    void dfs(int depth) {
        if (depth == n) {
            std::vector<Arc> list;
            list.reserve(m);
            for (int v = 0; v < n; ++v)
                for (int x : out_list[v]) list.push_back({label[v], label[x]});
            std::sort(list.begin(), list.end());
            best = std::move(list);  // guarded by can_improve, strictly better
            return;
        }
        uint32_t twins_tried = 0;
        for (int v : try_order) {
            if (label[v] >= 0) continue;
            const int root = find_twin_root(v);
            if ((twins_tried >> root) & 1u) continue;
            twins_tried |= 1u << root;
            label[v] = depth;
            chosen[depth] = v;
            if (can_improve(depth + 1)) dfs(depth + 1);
            label[v] = -1;
        }
    }
};

}  // namespace

CanonicalForm canonical_of_arcs(int n, std::span<const Arc> arcs) {
    // Strip isolated vertices; the compaction map cannot affect the result
    // since the search minimizes over all relabelings anyway.
    std::vector<int> compact(n, -1);
    int live = 0;
    for (const Arc& a : arcs) {
        if (compact[a.tail] < 0) compact[a.tail] = live++;
        if (compact[a.head] < 0) compact[a.head] = live++;
    }
    if (live > kMaxCanonicalVertices)
        throw TooLargeError("canonical_form supports at most 16 non-isolated vertices, got " +
                            std::to_string(live));
    if (live == 0) return {};

    CanonSearch s;
    s.n = live;
    s.m = static_cast<int>(arcs.size());
    for (const Arc& a : arcs) {
        const int u = compact[a.tail], v = compact[a.head];
        s.out[u] |= 1u << v;
        s.in[v] |= 1u << u;
        s.out_list[u].push_back(v);
    }
    s.compute_twins();
    for (int v = 0; v < live; ++v) s.find_twin_root(v);

    s.try_order.resize(live);
    std::iota(s.try_order.begin(), s.try_order.end(), 0);
    auto deg = [&](int v) {
        return std::pair{std::popcount(s.out[v]), std::popcount(s.in[v])};
    };
    std::sort(s.try_order.begin(), s.try_order.end(), [&](int a, int b) {
        return std::tuple{deg(b), a} < std::tuple{deg(a), b};  // degree desc, index asc
    });

    s.label.fill(-1);
    s.dfs(0);
    return {live, std::move(s.best)};
}

CanonicalForm canonical_form(const Digraph& g) {
    return canonical_of_arcs(g.vertex_count(), g.arcs());
}

Digraph digraph_of(const CanonicalForm& form) {
    return Digraph::from_arcs(form.n, form.arcs);
}

namespace {

// Iterated color refinement shared by both graphs; colors are comparable
// across the pair because signatures are pooled before renumbering.
// Returns per-vertex colors, or empty vectors if the histograms diverge.
using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;

bool refine_colors(const Digraph& a, const Digraph& b, std::vector<int>& ca,
                   std::vector<int>& cb) {
    ca.assign(a.vertex_count(), 0);
    cb.assign(b.vertex_count(), 0);

    int color_count = 1;
    for (int round = 0; round <= a.vertex_count(); ++round) {
        std::map<Signature, int> ids;
        auto signature = [&](const Digraph& g, const std::vector<int>& c, int v) {
            std::vector<int> outs, ins;
            for (int x : g.out_neighbors(v)) outs.push_back(c[x]);
            for (int x : g.in_neighbors(v)) ins.push_back(c[x]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            return Signature{c[v], std::move(outs), std::move(ins)};
        };
        std::vector<Signature> sa(a.vertex_count()), sb(b.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) sa[v] = signature(a, ca, v);
        for (int v = 0; v < b.vertex_count(); ++v) sb[v] = signature(b, cb, v);
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> na(a.vertex_count()), nb(b.vertex_count());
        std::vector<int> hist_a(next, 0), hist_b(next, 0);
        for (int v = 0; v < a.vertex_count(); ++v) ++hist_a[na[v] = ids[sa[v]]];
        for (int v = 0; v < b.vertex_count(); ++v) ++hist_b[nb[v] = ids[sb[v]]];
        if (hist_a != hist_b) return false;
        ca = std::move(na);
        cb = std::move(nb);
        if (next == color_count) break;  // stable
        color_count = next;
    }
    return true;
}

bool extend_mapping(const Digraph& a, const Digraph& b, const std::vector<int>& order,
                    const std::vector<int>& ca, const std::vector<int>& cb,
                    std::vector<int>& map_ab, std::vector<bool>& used, size_t idx) {
    if (idx == order.size()) return true;
    const int u = order[idx];
    for (int v = 0; v < b.vertex_count(); ++v) {
        if (used[v] || cb[v] != ca[u]) continue;
        bool ok = true;
        for (size_t k = 0; k < idx && ok; ++k) {
            const int p = order[k];
            ok = a.has_arc(u, p) == b.has_arc(v, map_ab[p]) &&
                 a.has_arc(p, u) == b.has_arc(map_ab[p], v);
        }
        if (!ok) continue;
        map_ab[u] = v;
        used[v] = true;
        if (extend_mapping(a, b, order, ca, cb, map_ab, used, idx + 1)) return true;
        used[v] = false;
    }
    return false;
}

Digraph strip_isolated(const Digraph& g) {
    std::vector<int> compact(g.vertex_count(), -1);
    int live = 0;
    for (const Arc& a : g.arcs()) {
        if (compact[a.tail] < 0) compact[a.tail] = live++;
        if (compact[a.head] < 0) compact[a.head] = live++;
    }
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) arcs.push_back({compact[a.tail], compact[a.head]});
    return Digraph::from_arcs(live, arcs);
}

}  // namespace

bool are_isomorphic(const Digraph& ga, const Digraph& gb) {
    const Digraph a = strip_isolated(ga);
    const Digraph b = strip_isolated(gb);
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
        return false;
    if (a.vertex_count() == 0) return true;

    auto degree_multiset = [](const Digraph& g) {
        std::vector<std::pair<int, int>> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degrees(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_multiset(a) != degree_multiset(b)) return false;

    std::vector<int> ca, cb;
    if (!refine_colors(a, b, ca, cb)) return false;

    // Match scarce color classes first; they constrain the search most.
    std::vector<int> class_size(*std::max_element(ca.begin(), ca.end()) + 1, 0);
    for (int c : ca) ++class_size[c];
    std::vector<int> order(a.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        return std::tuple{class_size[ca[u]], ca[u], u} <
               std::tuple{class_size[ca[v]], ca[v], v};
    });

    std::vector<int> map_ab(a.vertex_count(), -1);
    std::vector<bool> used(b.vertex_count(), false);
    return extend_mapping(a, b, order, ca, cb, map_ab, used, 0);
}

}  // namespace maxline
