#pragma once

#include <functional>
#include <vector>

#include "maxline/canonical.hpp"
#include "maxline/digraph.hpp"

namespace maxline {

enum class SearchMode { Exhaustive, BranchAndBound };

const char* search_mode_name(SearchMode mode);

struct LemmaChecks {
    bool two_circuit_present = true;    // every optimum has a 2-circuit (m >= 4)
    bool star_incidence = true;         // every optimum has all arcs on one vertex (m >= 7)
    bool arc_degree_bound = true;       // every optimum passes check_arc_degree_bound
    bool odd_order_degree_lemma = true; // odd m >= 7: every examined root's line digraph
                                        // has a vertex of total degree <= (m-1)/2

    friend bool operator==(const LemmaChecks&, const LemmaChecks&) = default;
};

struct VerificationReport {
    int m = 0;
    long long max_phi_found = 0;
    long long formula_value = 0;
    std::vector<CanonicalForm> optimal_classes;  // sorted
    LemmaChecks lemma_checks;
    long long roots_examined = 0;
    SearchMode mode = SearchMode::Exhaustive;
    double elapsed_seconds = 0.0;
};

/// Delivers one canonically labeled representative per isomorphism class of
/// connected, loop-free, simple digraphs with exactly m arcs and no isolated
/// vertices, in sorted canonical order. Returns the class count.
///
/// Classes are grown one arc at a time: every connected digraph admits an
/// arc order whose prefixes are connected, so extending each level's
/// representatives by a single arc touching the existing vertex set reaches
/// every class. Duplicates are collapsed by canonical form per level.
///
/// `jobs` > 1 expands each level's representatives in parallel (OpenMP);
/// results are identical for any job count. Throws TooLargeError for m > 7.
long long enumerate_connected(int m, const std::function<void(const Digraph&)>& sink,
                              int jobs = 1);

/// Computes max phi over all connected roots with m arcs plus the full set
/// of phi-maximal isomorphism classes, and evaluates the structural lemma
/// checks on them. Only connected roots are searched; phi of a disjoint
/// union is the sum of the parts' phis and max_arcs is strictly
/// superadditive (tested invariant), so no disconnected digraph can be
/// optimal.
///
/// Exhaustive mode (m <= 7) enumerates every class. Branch-and-bound mode
/// (m <= 9) additionally drops partial digraphs that provably cannot reach
/// phi = max_arcs(m); it returns results identical to exhaustive mode
/// wherever both run. Throws BoundViolatedError if any root beats the
/// closed-form bound.
VerificationReport verify_max(int m, SearchMode mode, int jobs = 1);

}  // namespace maxline
