#include <doctest.h>

#include <set>

#include "maxline/enumeration.hpp"
#include "maxline/extremal.hpp"
#include "maxline/line_transform.hpp"
#include "support.hpp"

using namespace maxline;
using testsupport::brute_connected_class_forms;

namespace {

std::vector<CanonicalForm> collect_classes(int m, int jobs = 1) {
    std::vector<CanonicalForm> forms;
    enumerate_connected(m, [&](const Digraph& g) { forms.push_back(canonical_form(g)); }, jobs);
    return forms;
}

bool same_results(const VerificationReport& a, const VerificationReport& b) {
    return a.m == b.m && a.max_phi_found == b.max_phi_found &&
           a.formula_value == b.formula_value && a.optimal_classes == b.optimal_classes &&
           a.lemma_checks == b.lemma_checks;
}

}  // namespace

TEST_CASE("enumerate_connected small counts") {
    // class counts cross-checked against a full labeled-subset scan
    CHECK(collect_classes(1).size() == 1);
    CHECK(collect_classes(2).size() == 4);
    CHECK(collect_classes(3).size() == 12);
    CHECK(collect_classes(4).size() == 53);
    CHECK(collect_classes(5).size() == 237);
    CHECK(enumerate_connected(0, [](const Digraph&) {}) == 0);
}

TEST_CASE("m=2 classes are exactly the four known shapes") {
    const auto forms = collect_classes(2);
    const std::set<CanonicalForm> got(forms.begin(), forms.end());
    const std::set<CanonicalForm> expect{
        canonical_form(Digraph::from_arcs(2, {{0, 1}, {1, 0}})),      // 2-circuit
        canonical_form(Digraph::from_arcs(3, {{0, 1}, {1, 2}})),      // path
        canonical_form(Digraph::from_arcs(3, {{0, 1}, {0, 2}})),      // out-star
        canonical_form(Digraph::from_arcs(3, {{1, 0}, {2, 0}})),      // in-star
    };
    CHECK(got == expect);
}

TEST_CASE("enumerate_connected matches the labeled-subset oracle up to m=4") {
    for (int m = 1; m <= 4; ++m) {
        const auto forms = collect_classes(m);
        // delivered representatives are pairwise non-isomorphic and sorted
        for (size_t i = 1; i < forms.size(); ++i) CHECK(forms[i - 1] < forms[i]);
        const std::set<CanonicalForm> got(forms.begin(), forms.end());
        CHECK(got == brute_connected_class_forms(m));
    }
}

TEST_CASE("delivered digraphs are connected with no isolated vertices") {
    for (int m = 1; m <= 5; ++m) {
        enumerate_connected(m, [&](const Digraph& g) {
            CHECK(g.arc_count() == m);
            CHECK(g.is_connected());
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(g.in_degree(v) + g.out_degree(v) > 0);
        });
    }
}

TEST_CASE("enumeration order is independent of the job count") {
    CHECK(collect_classes(5, 1) == collect_classes(5, 4));
}

TEST_CASE("enumerate_connected rejects m beyond the exhaustive guard") {
    CHECK_THROWS_AS(enumerate_connected(8, [](const Digraph&) {}), TooLargeError);
}

TEST_CASE("verify_max exhaustive, m = 2..6") {
    const long long expected_max[] = {0, 0, 2, 3, 6, 8, 12};
    const size_t expected_classes[] = {0, 0, 1, 3, 1, 3, 2};
    for (int m = 2; m <= 6; ++m) {
        const VerificationReport r = verify_max(m, SearchMode::Exhaustive);
        CHECK(r.max_phi_found == expected_max[m]);
        CHECK(r.max_phi_found == r.formula_value);
        CHECK(r.optimal_classes.size() == expected_classes[m]);
        CHECK(r.lemma_checks == LemmaChecks{});
        CHECK(r.roots_examined > 0);
    }
}

TEST_CASE("verify_max(4) optimum is the 3-vertex digraph with center (2,2)") {
    const VerificationReport r = verify_max(4, SearchMode::Exhaustive);
    REQUIRE(r.optimal_classes.size() == 1);
    CHECK(r.optimal_classes[0] == canonical_form(gen_o(4)));
    CHECK(digraph_of(r.optimal_classes[0]).vertex_count() == 3);
}

TEST_CASE("verify_max(6) shows the uniqueness threshold is tight") {
    const VerificationReport r = verify_max(6, SearchMode::Exhaustive);
    REQUIRE(r.optimal_classes.size() == 2);
    const CanonicalForm o6 = canonical_form(gen_o(6));
    const CanonicalForm triangle = canonical_form(
        Digraph::from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}));
    CHECK(o6 != triangle);
    CHECK(((r.optimal_classes[0] == o6 && r.optimal_classes[1] == triangle) ||
           (r.optimal_classes[0] == triangle && r.optimal_classes[1] == o6)));
}

TEST_CASE("branch and bound matches exhaustive wherever both run") {
    for (int m = 2; m <= 7; ++m) {
        const VerificationReport ex = verify_max(m, SearchMode::Exhaustive);
        const VerificationReport bb = verify_max(m, SearchMode::BranchAndBound);
        CHECK(same_results(ex, bb));
        CHECK(bb.roots_examined <= ex.roots_examined);
    }
}

TEST_CASE("branch and bound extends the uniqueness result to m = 8, 9") {
    const VerificationReport r8 = verify_max(8, SearchMode::BranchAndBound);
    CHECK(r8.max_phi_found == 20);
    REQUIRE(r8.optimal_classes.size() == 1);
    CHECK(r8.optimal_classes[0] == canonical_form(gen_o(8)));

    const VerificationReport r9 = verify_max(9, SearchMode::BranchAndBound);
    CHECK(r9.max_phi_found == 24);
    REQUIRE(r9.optimal_classes.size() == 2);
    const std::set<CanonicalForm> got(r9.optimal_classes.begin(), r9.optimal_classes.end());
    CHECK(got == std::set<CanonicalForm>{canonical_form(gen_o(9)),
                                         canonical_form(gen_o(9).transpose())});
}

TEST_CASE("verify_max is deterministic across job counts") {
    const VerificationReport serial = verify_max(5, SearchMode::Exhaustive, 1);
    const VerificationReport parallel = verify_max(5, SearchMode::Exhaustive, 4);
    CHECK(same_results(serial, parallel));
    CHECK(serial.roots_examined == parallel.roots_examined);
}

TEST_CASE("verify_max size guards") {
    CHECK_THROWS_AS(verify_max(8, SearchMode::Exhaustive), TooLargeError);
    CHECK_THROWS_AS(verify_max(10, SearchMode::BranchAndBound), TooLargeError);
    CHECK_THROWS_AS(verify_max(0, SearchMode::Exhaustive), InvalidSizeError);
}

TEST_CASE("distinct optimal roots give distinct line digraphs (m = 6, 7)") {
    const CanonicalForm l_o6 = canonical_form(line_digraph(gen_o(6)).graph);
    const CanonicalForm l_tri = canonical_form(line_digraph(
        Digraph::from_arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}})).graph);
    CHECK(l_o6 != l_tri);

    const CanonicalForm l_o7 = canonical_form(line_digraph(gen_o(7)).graph);
    const CanonicalForm l_o7t = canonical_form(line_digraph(gen_o(7).transpose()).graph);
    CHECK(l_o7 != l_o7t);
}
