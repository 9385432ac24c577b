#pragma once

#include <compare>
#include <span>
#include <vector>

#include "maxline/digraph.hpp"

namespace maxline {

/// Relabeling-invariant fingerprint: the lexicographically smallest arc
/// list over all relabelings of the non-isolated vertices, plus their
/// count. Equal for two digraphs iff they are isomorphic once isolated
/// vertices are stripped.
struct CanonicalForm {
    int n = 0;
    std::vector<Arc> arcs;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws TooLargeError beyond 16 non-isolated vertices.
CanonicalForm canonical_form(const Digraph& g);

/// Same computation on a raw arc set, skipping Digraph construction.
/// Isolated vertices among 0..n-1 are stripped first.
CanonicalForm canonical_of_arcs(int n, std::span<const Arc> arcs);

/// The canonically labeled representative.
Digraph digraph_of(const CanonicalForm& form);

/// True iff an arc-preserving bijection exists between the non-isolated
/// vertices. Independent of canonical_form: degree-profile prescreen,
/// color refinement, then backtracking over color-compatible mappings.
bool are_isomorphic(const Digraph& a, const Digraph& b);

}  // namespace maxline
