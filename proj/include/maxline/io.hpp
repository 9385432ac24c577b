#pragma once

#include <string>
#include <string_view>

#include "maxline/digraph.hpp"
#include "maxline/enumeration.hpp"
#include "maxline/line_transform.hpp"

namespace maxline {

enum class EmitFormat { Edges, Dot };

/// Edge-list document: optional header "n <count>", one "tail head" pair
/// per line, '#' to end of line is a comment, blank lines ignored. Without
/// a header the vertex count is 1 + the largest index mentioned.
Digraph parse_edge_list(std::string_view text);

/// Deterministic output. Edges format round-trips through parse_edge_list
/// exactly; DOT lists vertices then arcs in sorted order.
std::string emit(const Digraph& g, EmitFormat format);

/// L(G) with its label table: as edges, labels ride along in '#' comments
/// (so the document still parses); as DOT, they become node labels.
std::string emit_line_digraph(const LineDigraph& l, EmitFormat format);

/// Key/value lines; stable across identical runs (no timing included).
std::string report_to_text(const VerificationReport& report);

/// Full report as a JSON document, including elapsed_seconds.
std::string report_to_json(const VerificationReport& report);

}  // namespace maxline
