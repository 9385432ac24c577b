#include "maxline/enumeration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "maxline/extremal.hpp"
#include "maxline/line_transform.hpp"

namespace maxline {

const char* search_mode_name(SearchMode mode) {
    return mode == SearchMode::Exhaustive ? "exhaustive" : "branch_and_bound";
}

namespace {

constexpr int kMaxExhaustive = 7;
constexpr int kMaxBranchAndBound = 9;

struct DegreeStats {
    long long phi = 0;
    int max_out = 0;
    int max_in = 0;
};

DegreeStats degree_stats(int n, const std::vector<Arc>& arcs) {
    std::array<int, 24> din{}, dout{};
    for (const Arc& a : arcs) {
        ++dout[a.tail];
        ++din[a.head];
    }
    DegreeStats s;
    for (int v = 0; v < n; ++v) {
        s.phi += static_cast<long long>(din[v]) * dout[v];
        s.max_out = std::max(s.max_out, dout[v]);
        s.max_in = std::max(s.max_in, din[v]);
    }
    return s;
}

// Conservative upper bound on the phi gain of adding r more arcs to a
// k-arc digraph. Two bounds, take the smaller:
//   - adding the i-th extra arc (u,v) gains in(u) + out(v), and the two
//     degrees together count each present arc at most once plus one for a
//     possible (v,u), so the gain is at most (k + i - 1) + 1;
//   - splitting phi(final) over old and new arcs: the mixed terms are at
//     most r * (max_in + max_out) of the prefix, and the new arcs alone
//     contribute at most max_arcs(r).
long long gain_upper_bound(const DegreeStats& s, long long k, long long r) {
    const long long incremental = r * k + r * (r + 1) / 2;
    const long long split = r * (s.max_out + s.max_in) + max_arcs(r);
    return std::min(incremental, split);
}

// All one-arc extensions of `rep` whose new arc touches the existing
// vertex set (preserving connectivity), canonicalized. When pruning is
// active, children that provably cannot reach `incumbent` with
// `remaining - 1` further arcs are dropped before canonicalization.
void extend_one(const CanonicalForm& rep, bool prune, long long incumbent,
                int remaining, std::vector<CanonicalForm>& out) {
    const int n = rep.n;
    std::array<uint32_t, 24> adj{};
    for (const Arc& a : rep.arcs) adj[a.tail] |= 1u << a.head;

    std::vector<Arc> child = rep.arcs;
    child.push_back({});
    auto emit = [&](int child_n, Arc added) {
        child.back() = added;
        if (prune && remaining > 1) {
            const DegreeStats s = degree_stats(child_n, child);
            if (s.phi + gain_upper_bound(s, static_cast<long long>(child.size()),
                                         remaining - 1) < incumbent)
                return;
        }
        out.push_back(canonical_of_arcs(child_n, child));
    };

    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !((adj[u] >> v) & 1u)) emit(n, {u, v});
    for (int u = 0; u < n; ++u) {
        emit(n + 1, {u, n});
        emit(n + 1, {n, u});
    }
}

std::vector<CanonicalForm> expand_level(const std::vector<CanonicalForm>& level,
                                        bool prune, long long incumbent, int remaining,
                                        int jobs) {
    std::vector<CanonicalForm> merged;
#ifdef _OPENMP
    if (jobs > 1) {
        std::vector<std::vector<CanonicalForm>> parts;
#pragma omp parallel num_threads(jobs)
        {
#pragma omp single
            parts.resize(omp_get_num_threads());
            std::vector<CanonicalForm>& local = parts[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
            for (size_t i = 0; i < level.size(); ++i)
                extend_one(level[i], prune, incumbent, remaining, local);
        }
        size_t total = 0;
        for (const auto& p : parts) total += p.size();
        merged.reserve(total);
        for (auto& p : parts)
            merged.insert(merged.end(), std::make_move_iterator(p.begin()),
                          std::make_move_iterator(p.end()));
    } else
#endif
    {
        (void)jobs;  // serial reference path
        for (const CanonicalForm& rep : level)
            extend_one(rep, prune, incumbent, remaining, merged);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

// Connected classes with m arcs, grown level by level from the single arc.
std::vector<CanonicalForm> connected_classes(int m, bool prune, long long incumbent,
                                             int jobs) {
    if (m <= 0) return {};
    std::vector<CanonicalForm> level{CanonicalForm{2, {{0, 1}}}};
    for (int k = 1; k < m; ++k)
        level = expand_level(level, prune, incumbent, m - k, jobs);
    return level;
}

}  // namespace

long long enumerate_connected(int m, const std::function<void(const Digraph&)>& sink,
                              int jobs) {
    if (m < 0) throw InvalidSizeError("arc count must be non-negative");
    if (m > kMaxExhaustive)
        throw TooLargeError("exhaustive enumeration supports m <= " +
                            std::to_string(kMaxExhaustive) + ", got " + std::to_string(m));
    const std::vector<CanonicalForm> classes = connected_classes(m, false, 0, jobs);
    for (const CanonicalForm& form : classes) sink(digraph_of(form));
    return static_cast<long long>(classes.size());
}

VerificationReport verify_max(int m, SearchMode mode, int jobs) {
    const int limit = mode == SearchMode::Exhaustive ? kMaxExhaustive : kMaxBranchAndBound;
    if (m < 1) throw InvalidSizeError("verify_max requires m >= 1");
    if (m > limit)
        throw TooLargeError(std::string(search_mode_name(mode)) + " mode supports m <= " +
                            std::to_string(limit) + ", got " + std::to_string(m));

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.m = m;
    report.formula_value = max_arcs(m);
    report.mode = mode;

    // The incumbent is the known-achievable phi of gen_o(m); pruning drops
    // only branches that cannot reach it, so anything scoring >= incumbent
    // (including a hypothetical counterexample) still gets enumerated.
    const bool prune = mode == SearchMode::BranchAndBound;
    const std::vector<CanonicalForm> finals =
        connected_classes(m, prune, report.formula_value, jobs);

    report.roots_examined = static_cast<long long>(finals.size());

    std::vector<long long> phis(finals.size());
    std::vector<char> degree_lemma_ok(finals.size(), 1);
    const bool check_degree_lemma = m % 2 == 1 && m >= 7;
    const int degree_cap = (m - 1) / 2;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(std::max(jobs, 1)) if (jobs > 1)
#endif
    for (size_t i = 0; i < finals.size(); ++i) {
        const DegreeStats s = degree_stats(finals[i].n, finals[i].arcs);
        phis[i] = s.phi;
        if (check_degree_lemma) {
            // Line vertex of root arc (u,v) has total degree in(u) + out(v).
            std::array<int, 24> din{}, dout{};
            for (const Arc& a : finals[i].arcs) {
                ++dout[a.tail];
                ++din[a.head];
            }
            bool found = false;
            for (const Arc& a : finals[i].arcs)
                if (din[a.tail] + dout[a.head] <= degree_cap) {
                    found = true;
                    break;
                }
            degree_lemma_ok[i] = found ? 1 : 0;
        }
    }

    report.max_phi_found = 0;
    for (size_t i = 0; i < finals.size(); ++i) {
        if (phis[i] > report.formula_value)
            throw BoundViolatedError("digraph with phi=" + std::to_string(phis[i]) +
                                     " exceeds max_arcs(" + std::to_string(m) +
                                     ")=" + std::to_string(report.formula_value));
        report.max_phi_found = std::max(report.max_phi_found, phis[i]);
        if (check_degree_lemma && !degree_lemma_ok[i])
            report.lemma_checks.odd_order_degree_lemma = false;
    }
    for (size_t i = 0; i < finals.size(); ++i)
        if (phis[i] == report.max_phi_found) report.optimal_classes.push_back(finals[i]);

    for (const CanonicalForm& form : report.optimal_classes) {
        const Digraph g = digraph_of(form);
        if (m >= 4 && g.two_circuits().empty()) report.lemma_checks.two_circuit_present = false;
        if (m >= 7) {
            bool star = false;
            for (int w = 0; w < g.vertex_count() && !star; ++w) {
                star = true;
                for (const Arc& a : g.arcs())
                    if (a.tail != w && a.head != w) {
                        star = false;
                        break;
                    }
            }
            if (!star) report.lemma_checks.star_incidence = false;
        }
        if (!check_arc_degree_bound(g)) report.lemma_checks.arc_degree_bound = false;
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace maxline
