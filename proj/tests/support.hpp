#pragma once

// Test-only helpers. The oracles here are deliberately dumb and independent
// of the library's search paths: canonical labels come from a full scan of
// all n! relabelings, subsets are enumerated literally, and line arcs are
// recomputed from the definition.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "maxline/canonical.hpp"
#include "maxline/digraph.hpp"

namespace testsupport {

using maxline::Arc;
using maxline::CanonicalForm;
using maxline::Digraph;

struct TestRng {
    explicit TestRng(uint64_t seed) : gen(seed) {}
    int below(int k) { return static_cast<int>(gen() % static_cast<uint64_t>(k)); }
    std::mt19937_64 gen;
};

inline Digraph random_digraph(TestRng& rng, int max_n, int max_m) {
    const int n = 1 + rng.below(max_n);
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    const int cap = std::min<int>(max_m, static_cast<int>(pairs.size()));
    const int m = cap == 0 ? 0 : rng.below(cap + 1);
    for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
        std::swap(pairs[i], pairs[rng.below(i + 1)]);
    pairs.resize(m);
    return Digraph::from_arcs(n, pairs);
}

inline Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
    return Digraph::from_arcs(g.vertex_count(), arcs);
}

inline Digraph random_relabel(TestRng& rng, const Digraph& g) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.vertex_count() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(i + 1)]);
    return relabel(g, perm);
}

// Oracle canonical form: strip isolated vertices, then take the minimum
// sorted arc list over every permutation. Exponential and proud of it.
inline CanonicalForm perm_min_form(int n, const std::vector<Arc>& arcs) {
    std::vector<int> compact(n, -1);
    int live = 0;
    for (const Arc& a : arcs) {
        if (compact[a.tail] < 0) compact[a.tail] = live++;
        if (compact[a.head] < 0) compact[a.head] = live++;
    }
    std::vector<int> perm(live);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Arc> best;
    bool have = false;
    do {
        std::vector<Arc> relabeled;
        relabeled.reserve(arcs.size());
        for (const Arc& a : arcs) relabeled.push_back({perm[compact[a.tail]], perm[compact[a.head]]});
        std::sort(relabeled.begin(), relabeled.end());
        if (!have || relabeled < best) {
            best = std::move(relabeled);
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {live, best};
}

inline CanonicalForm perm_min_form(const Digraph& g) {
    return perm_min_form(g.vertex_count(), g.arcs());
}

// All arc subsets of size m over vertices 0..n-1 (ordered pairs, no loops).
inline void for_each_arc_subset(int n, int m,
                                const std::function<void(const std::vector<Arc>&)>& fn) {
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.push_back({u, v});
    const int total = static_cast<int>(pairs.size());
    if (m > total) return;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Arc> subset(m);
    while (true) {
        for (int i = 0; i < m; ++i) subset[i] = pairs[idx[i]];
        fn(subset);
        int i = m - 1;
        while (i >= 0 && idx[i] == total - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool touches_all_and_connected(int n, const std::vector<Arc>& arcs) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::vector<bool> touched(n, false);
    for (const Arc& a : arcs) {
        touched[a.tail] = touched[a.head] = true;
        const int ra = find(a.tail), rb = find(a.head);
        if (ra != rb) parent[ra] = rb;
    }
    if (!std::all_of(touched.begin(), touched.end(), [](bool b) { return b; })) return false;
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// Isomorphism classes of connected m-arc digraphs without isolated
// vertices, by literal enumeration of labeled arc subsets.
inline std::set<CanonicalForm> brute_connected_class_forms(int m) {
    std::set<CanonicalForm> forms;
    for (int n = 2; n <= m + 1; ++n)
        for_each_arc_subset(n, m, [&](const std::vector<Arc>& arcs) {
            if (touches_all_and_connected(n, arcs)) forms.insert(perm_min_form(n, arcs));
        });
    return forms;
}

// Line arcs straight from the definition: (i, j) when arcs[i].head ==
// arcs[j].tail, i != j.
inline std::vector<Arc> oracle_line_arcs(const std::vector<Arc>& arcs) {
    std::vector<Arc> out;
    const int m = static_cast<int>(arcs.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && arcs[i].head == arcs[j].tail) out.push_back({i, j});
    return out;
}

}  // namespace testsupport
