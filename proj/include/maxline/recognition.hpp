#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxline/digraph.hpp"

namespace maxline {

enum class PatternKind { Eight, Shortcut, Deviation, BadZ };

const char* pattern_name(PatternKind kind);

/// A concrete embedding of a forbidden pattern.
///
/// Vertex tuples, all entries pairwise distinct:
///   Eight     (v, a, b)     arcs (v,a),(a,v),(v,b),(b,v)
///   Shortcut  (x, y, z)     arcs (x,y),(y,z),(x,z)
///   Deviation (u, a, b, v)  arcs (u,a),(a,v),(u,b),(b,v)
///   BadZ      (a, b, c, d)  arcs (a,c),(b,c),(b,d); arc (a,d) absent
struct PatternWitness {
    PatternKind kind;
    std::vector<int> vertices;

    friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

struct RecognitionVerdict {
    bool is_line = false;
    std::optional<PatternWitness> witness;  // present iff !is_line
};

std::optional<PatternWitness> find_eight(const Digraph& h);
std::optional<PatternWitness> find_shortcut(const Digraph& h);
std::optional<PatternWitness> find_deviation(const Digraph& h);
std::optional<PatternWitness> find_bad_z(const Digraph& h);

/// Line digraph iff none of the four patterns embeds. On failure returns
/// the first witness in detector order Eight, Shortcut, Deviation, BadZ.
RecognitionVerdict is_line_digraph(const Digraph& h);

class NotLineDigraphError : public Error {
public:
    NotLineDigraphError(std::string msg, PatternWitness witness)
        : Error(std::move(msg)), witness_(std::move(witness)) {}

    const PatternWitness& witness() const { return witness_; }

private:
    PatternWitness witness_;
};

/// Builds a root digraph G with line_digraph(G).graph isomorphic to h.
///
/// Endpoint identification: each vertex i of h gets a tail symbol t_i and a
/// head symbol h_i; arc (i, j) merges h_i with t_j. Merge classes become
/// root vertices, (class(t_i), class(h_i)) the root arcs. Endpoint classes
/// that never merge stay distinct, so the root is never over-collapsed.
///
/// Throws NotLineDigraphError when h fails recognition, and
/// InternalInconsistencyError if the construction produces a loop or
/// duplicate arc despite a passing verdict (recognizer bug; unreachable).
Digraph reconstruct_root(const Digraph& h);

}  // namespace maxline
