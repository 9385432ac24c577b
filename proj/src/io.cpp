#include "maxline/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace maxline {

namespace {

std::string_view strip_comment(std::string_view line) {
    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
        line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
        line.remove_prefix(1);
    return line;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(line_no, std::string("expected non-negative integer for ") + what +
                                      ", got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
    std::vector<Arc> arcs;
    std::vector<int> arc_lines;
    int header_n = -1;
    bool body_started = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const std::string_view line = strip_comment(raw);
        if (line.empty()) continue;
        const auto toks = tokens(line);
        if (toks[0] == "n") {
            if (header_n >= 0) throw ParseError(line_no, "duplicate header");
            if (body_started) throw ParseError(line_no, "header must precede arcs");
            if (toks.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
            header_n = parse_int(toks[1], line_no, "vertex count");
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected 'tail head'");
        body_started = true;
        const int tail = parse_int(toks[0], line_no, "tail");
        const int head = parse_int(toks[1], line_no, "head");
        if (tail == head)
            throw LoopArcError("loop arc (" + std::to_string(tail) + "," +
                               std::to_string(head) + ") at line " + std::to_string(line_no));
        arcs.push_back({tail, head});
        arc_lines.push_back(line_no);
    }

    int n = header_n;
    if (n < 0) {
        n = 0;
        for (const Arc& a : arcs) n = std::max({n, a.tail + 1, a.head + 1});
    } else {
        for (size_t i = 0; i < arcs.size(); ++i)
            if (arcs[i].tail >= n || arcs[i].head >= n)
                throw ParseError(arc_lines[i], "vertex index exceeds declared count");
    }
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (arcs[i] == arcs[j])
                throw DuplicateArcError("duplicate arc (" + std::to_string(arcs[j].tail) + "," +
                                        std::to_string(arcs[j].head) + ") at line " +
                                        std::to_string(arc_lines[j]));
    return Digraph::from_arcs(n, arcs);
}

std::string emit(const Digraph& g, EmitFormat format) {
    std::ostringstream out;
    if (format == EmitFormat::Edges) {
        out << "n " << g.vertex_count() << "\n";
        for (const Arc& a : g.arcs()) out << a.tail << " " << a.head << "\n";
    } else {
        out << "digraph G {\n";
        for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
        for (const Arc& a : g.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
        out << "}\n";
    }
    return out.str();
}

std::string emit_line_digraph(const LineDigraph& l, EmitFormat format) {
    std::ostringstream out;
    if (format == EmitFormat::Edges) {
        out << emit(l.graph, EmitFormat::Edges);
        for (size_t i = 0; i < l.labels.size(); ++i)
            out << "# vertex " << i << " = root arc (" << l.labels[i].tail << ","
                << l.labels[i].head << ")\n";
    } else {
        out << "digraph G {\n";
        for (size_t i = 0; i < l.labels.size(); ++i)
            out << "  " << i << " [label=\"(" << l.labels[i].tail << "," << l.labels[i].head
                << ")\"];\n";
        for (const Arc& a : l.graph.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
        out << "}\n";
    }
    return out.str();
}

namespace {

std::string arcs_text(const std::vector<Arc>& arcs) {
    std::ostringstream out;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) out << " ";
        out << "(" << arcs[i].tail << "," << arcs[i].head << ")";
    }
    return out.str();
}

}  // namespace

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "m: " << r.m << "\n";
    out << "mode: " << search_mode_name(r.mode) << "\n";
    out << "max_phi_found: " << r.max_phi_found << "\n";
    out << "formula_value: " << r.formula_value << "\n";
    out << "roots_examined: " << r.roots_examined << "\n";
    out << "optimal_classes: " << r.optimal_classes.size() << "\n";
    for (size_t i = 0; i < r.optimal_classes.size(); ++i)
        out << "optimal_class_" << i << ": n=" << r.optimal_classes[i].n << " arcs="
            << arcs_text(r.optimal_classes[i].arcs) << "\n";
    out << "lemma_two_circuit_present: " << (r.lemma_checks.two_circuit_present ? "true" : "false")
        << "\n";
    out << "lemma_star_incidence: " << (r.lemma_checks.star_incidence ? "true" : "false") << "\n";
    out << "lemma_arc_degree_bound: " << (r.lemma_checks.arc_degree_bound ? "true" : "false")
        << "\n";
    out << "lemma_odd_order_degree: " << (r.lemma_checks.odd_order_degree_lemma ? "true" : "false")
        << "\n";
    return out.str();
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["mode"] = search_mode_name(r.mode);
    j["max_phi_found"] = r.max_phi_found;
    j["formula_value"] = r.formula_value;
    j["roots_examined"] = r.roots_examined;
    j["elapsed_seconds"] = r.elapsed_seconds;
    auto classes = nlohmann::json::array();
    for (const CanonicalForm& form : r.optimal_classes) {
        auto arcs = nlohmann::json::array();
        for (const Arc& a : form.arcs) arcs.push_back({a.tail, a.head});
        classes.push_back({{"n", form.n}, {"arcs", arcs}});
    }
    j["optimal_classes"] = classes;
    j["lemma_checks"] = {
        {"two_circuit_present", r.lemma_checks.two_circuit_present},
        {"star_incidence", r.lemma_checks.star_incidence},
        {"arc_degree_bound", r.lemma_checks.arc_degree_bound},
        {"odd_order_degree_lemma", r.lemma_checks.odd_order_degree_lemma},
    };
    return j.dump(2) + "\n";
}

}  // namespace maxline
