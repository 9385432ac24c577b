#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxline/canonical.hpp"
#include "maxline/enumeration.hpp"
#include "maxline/extremal.hpp"
#include "maxline/io.hpp"
#include "maxline/line_transform.hpp"
#include "maxline/recognition.hpp"

using namespace maxline;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EmitFormat to_format(const std::string& name) {
    return name == "dot" ? EmitFormat::Dot : EmitFormat::Edges;
}

std::string witness_text(const PatternWitness& w) {
    std::ostringstream out;
    out << pattern_name(w.kind) << " (";
    for (size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) out << ",";
        out << w.vertices[i];
    }
    out << ")";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-digraph toolkit: generators, recognition, root "
                 "reconstruction and exhaustive maximum-arc verification"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string format = "edges";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"edges", "dot"}));
    };

    auto* gen = app.add_subcommand("gen", "emit a generated digraph");
    gen->require_subcommand(1);

    int gen_m = 0;
    bool gen_transpose = false;
    auto* gen_o_cmd = gen->add_subcommand("o", "extremal root with m arcs");
    gen_o_cmd->add_option("m", gen_m, "arc count")->required();
    gen_o_cmd->add_flag("--transpose", gen_transpose, "emit the transpose");
    add_format(gen_o_cmd);
    gen_o_cmd->callback([&] {
        Digraph g = gen_o(gen_m);
        if (gen_transpose) g = g.transpose();
        std::cout << emit(g, to_format(format));
    });

    auto* gen_line_cmd = gen->add_subcommand("extremal-line", "extremal line digraph of order m");
    gen_line_cmd->add_option("m", gen_m, "order")->required();
    add_format(gen_line_cmd);
    gen_line_cmd->callback([&] { std::cout << emit(gen_max_line(gen_m), to_format(format)); });

    StarSpec star;
    auto* gen_star_cmd = gen->add_subcommand("star", "star digraph with x in-arcs, y out-arcs, c 2-circuits");
    gen_star_cmd->add_option("x", star.incoming, "incoming arcs at the center")->required();
    gen_star_cmd->add_option("y", star.outgoing, "outgoing arcs at the center")->required();
    gen_star_cmd->add_option("c", star.circuits, "number of 2-circuits")->required();
    add_format(gen_star_cmd);
    gen_star_cmd->callback([&] { std::cout << emit(gen_star(star), to_format(format)); });

    std::string file_a, file_b;

    auto* line_cmd = app.add_subcommand("line", "emit the line digraph plus its label table");
    line_cmd->add_option("file", file_a, "edge-list file ('-' for stdin)")->required();
    add_format(line_cmd);
    line_cmd->callback([&] {
        std::cout << emit_line_digraph(line_digraph(parse_edge_list(read_input(file_a))),
                                       to_format(format));
    });

    auto* phi_cmd = app.add_subcommand("phi", "print phi of the digraph");
    phi_cmd->add_option("file", file_a, "edge-list file ('-' for stdin)")->required();
    phi_cmd->callback([&] { std::cout << phi(parse_edge_list(read_input(file_a))) << "\n"; });

    int arcs_m = 0;
    auto* max_arcs_cmd = app.add_subcommand("max-arcs", "print the maximum arc count of a line digraph of order m");
    max_arcs_cmd->add_option("m", arcs_m, "order")->required()->check(CLI::NonNegativeNumber);
    max_arcs_cmd->callback([&] { std::cout << max_arcs(arcs_m) << "\n"; });

    bool show_witness = false;
    auto* check_cmd = app.add_subcommand("check", "decide whether the digraph is a line digraph");
    check_cmd->add_option("file", file_a, "edge-list file ('-' for stdin)")->required();
    check_cmd->add_flag("--witness", show_witness, "print the forbidden-pattern witness");
    check_cmd->callback([&] {
        const RecognitionVerdict v = is_line_digraph(parse_edge_list(read_input(file_a)));
        if (v.is_line) {
            std::cout << "line-digraph\n";
        } else {
            std::cout << "not-line-digraph\n";
            if (show_witness) std::cout << "witness: " << witness_text(*v.witness) << "\n";
            exit_code = 1;
        }
    });

    auto* root_cmd = app.add_subcommand("root", "emit a root digraph of the given line digraph");
    root_cmd->add_option("file", file_a, "edge-list file ('-' for stdin)")->required();
    add_format(root_cmd);
    root_cmd->callback([&] {
        std::cout << emit(reconstruct_root(parse_edge_list(read_input(file_a))),
                          to_format(format));
    });

    auto* iso_cmd = app.add_subcommand("iso", "decide whether two digraphs are isomorphic");
    iso_cmd->add_option("fileA", file_a, "edge-list file")->required();
    iso_cmd->add_option("fileB", file_b, "edge-list file")->required();
    iso_cmd->callback([&] {
        const bool same = are_isomorphic(parse_edge_list(read_input(file_a)),
                                         parse_edge_list(read_input(file_b)));
        std::cout << (same ? "isomorphic" : "not-isomorphic") << "\n";
        if (!same) exit_code = 1;
    });

    auto* verify = app.add_subcommand("verify", "machine-check the closed-form results");
    verify->require_subcommand(1);
    int verify_m = 0;
    std::string mode_name = "exhaustive";
    int jobs = 1;
    std::string report_path;
    auto* verify_max_cmd = verify->add_subcommand(
        "max", "maximize phi over all connected roots with m arcs and check the optima");
    verify_max_cmd->add_option("m", verify_m, "arc count")->required();
    verify_max_cmd->add_option("--mode", mode_name, "search mode")
        ->check(CLI::IsMember({"exhaustive", "bnb"}));
    verify_max_cmd->add_option("--jobs", jobs, "worker count (affects speed only)")
        ->check(CLI::PositiveNumber);
    verify_max_cmd->add_option("--report", report_path, "write the full report as JSON");
    verify_max_cmd->callback([&] {
        const SearchMode mode =
            mode_name == "bnb" ? SearchMode::BranchAndBound : SearchMode::Exhaustive;
        const VerificationReport r = verify_max(verify_m, mode, jobs);
        std::cout << report_to_text(r);
        std::cerr << "elapsed: " << r.elapsed_seconds << " s\n";
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            if (!out) throw Error("cannot write '" + report_path + "'");
            out << report_to_json(r);
        }
        const bool ok = r.max_phi_found == r.formula_value && !r.optimal_classes.empty() &&
                        r.lemma_checks == LemmaChecks{};
        if (!ok) {
            std::cerr << "verification mismatch\n";
            exit_code = 3;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const NotLineDigraphError& e) {
        std::cerr << "error: " << e.what() << " " << witness_text(e.witness()) << "\n";
        return 1;
    } catch (const BoundViolatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
