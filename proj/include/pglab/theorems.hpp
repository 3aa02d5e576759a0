#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pglab/connectivity.hpp"
#include "pglab/families.hpp"
#include "pglab/group.hpp"
#include "pglab/power_graph.hpp"

namespace pglab {

// Both subgroups contain the identity (element 0); the intersection is
// trivial when they share nothing else.
inline bool trivial_intersection(const CyclicSubgroup& a, const CyclicSubgroup& b) {
    size_t i = 0, j = 0;
    int common = 0;
    while (i < a.elements.size() && j < b.elements.size()) {
        if (a.elements[i] == b.elements[j]) { ++common; ++i; ++j; }
        else if (a.elements[i] < b.elements[j]) ++i;
        else ++j;
    }
    return common == 1;
}

// A cyclic subgroup cited as evidence: its index into cyclic_subgroups()
// plus its order for human-readable reports.
struct SubgroupRef {
    int index = -1;
    int order = 0;
};

// A satisfied structural condition, tagged with which branch fired and which
// cyclic subgroups witness it.
struct CaseResult {
    std::optional<std::string> tag;
    std::vector<SubgroupRef> witness;
};

namespace detail {

inline int require_p_group(const FiniteGroup& g) {
    auto p = g.p_group_prime();
    if (!p)
        raise(ErrorCode::NotAPGroup,
              g.name() + " has order " + std::to_string(g.order()) +
                  ", not a prime power");
    return *p;
}

inline std::vector<int> maximal_with_order_above(const FiniteGroup& g, int bound) {
    std::vector<int> out;
    for (int i : g.maximal_cyclic_indices())
        if (g.cyclic_subgroups()[i].order > bound) out.push_back(i);
    return out;
}

inline std::optional<std::pair<int, int>> first_trivial_pair_above(
    const FiniteGroup& g, int bound) {
    std::vector<int> cands = maximal_with_order_above(g, bound);
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j)
            if (trivial_intersection(g.cyclic_subgroups()[cands[i]],
                                     g.cyclic_subgroups()[cands[j]]))
                return std::make_pair(cands[i], cands[j]);
    return std::nullopt;
}

inline SubgroupRef ref_of(const FiniteGroup& g, int index) {
    return {index, g.cyclic_subgroups()[index].order};
}

}  // namespace detail

// Structural trichotomy behind separability of a p-group's power graph.
// Branches are evaluated in the fixed order a, b, c1, c2 and the first hit is
// reported; the branches are not mutually exclusive.
inline CaseResult separability_condition(const FiniteGroup& g) {
    int p = detail::require_p_group(g);
    const auto& maximal = g.maximal_cyclic_indices();
    if (p > 3 && !g.is_cyclic())
        return {"a", {detail::ref_of(g, maximal[0]), detail::ref_of(g, maximal[1])}};
    if (p == 3) {
        std::vector<int> big = detail::maximal_with_order_above(g, 3);
        if (big.size() >= 2)
            return {"b", {detail::ref_of(g, big[0]), detail::ref_of(g, big[1])}};
    }
    if (p == 2) {
        std::vector<int> big = detail::maximal_with_order_above(g, 4);
        if (big.size() >= 2)
            return {"c1", {detail::ref_of(g, big[0]), detail::ref_of(g, big[1])}};
        auto pair = detail::first_trivial_pair_above(g, 2);
        if (pair)
            return {"c2", {detail::ref_of(g, pair->first), detail::ref_of(g, pair->second)}};
    }
    return {std::nullopt, {}};
}

// Structural condition for vertex connectivity meeting cyclic vertex
// connectivity: either p > 3 with G non-cyclic, or two maximal cyclic
// subgroups of order > p meeting only in the identity.
inline CaseResult equality_condition(const FiniteGroup& g) {
    int p = detail::require_p_group(g);
    const auto& maximal = g.maximal_cyclic_indices();
    if (p > 3 && !g.is_cyclic())
        return {"i", {detail::ref_of(g, maximal[0]), detail::ref_of(g, maximal[1])}};
    if (p == 2 || p == 3) {
        auto pair = detail::first_trivial_pair_above(g, p);
        if (pair)
            return {"ii", {detail::ref_of(g, pair->first), detail::ref_of(g, pair->second)}};
    }
    return {std::nullopt, {}};
}

// Everything derived once per group and shared by the verifiers: both graphs,
// their equality, the group-side invariants, and the connectivity report of
// the power graph.
struct GroupAnalysis {
    std::shared_ptr<const FiniteGroup> group;
    std::optional<int> p;
    int delta = 0;
    int num_maximal = 0;
    PowerGraph power;
    PowerGraph enhanced;
    bool graphs_equal = false;
    bool all_prime_power = false;
    ConnectivityReport conn;
};

inline bool edge_identical(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices()) return false;
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!(a.neighbors(v) == b.neighbors(v))) return false;
    return true;
}

inline GroupAnalysis analyze_group(const FiniteGroup& g,
                                   const SolverOptions& opts = {}) {
    GroupAnalysis a;
    a.power = power_graph(g);
    a.enhanced = enhanced_power_graph(g);
    a.group = a.power.group;
    a.p = g.p_group_prime();
    a.delta = g.difference_number();
    a.num_maximal = static_cast<int>(g.maximal_cyclic_indices().size());
    a.graphs_equal = edge_identical(a.power.graph, a.enhanced.graph);
    a.all_prime_power = all_cyclic_subgroups_prime_power(g);
    a.conn = connectivity_report(a.power.graph, opts);
    return a;
}

// Three-way equivalence check: graph-side separability, the invariant
// threshold delta >= 3, and the structural case analysis. The three are
// computed from independent inputs, so agreement is evidence, not tautology.
struct SeparabilityVerdict {
    bool sep_graph = false;
    bool delta_ge_3 = false;
    CaseResult condition;
    bool all_agree = false;
};

inline SeparabilityVerdict verify_separability(const GroupAnalysis& a) {
    SeparabilityVerdict v;
    v.sep_graph = a.conn.separable;
    v.delta_ge_3 = a.delta >= 3;
    v.condition = separability_condition(*a.group);
    bool cond = v.condition.tag.has_value();
    v.all_agree = (v.sep_graph == v.delta_ge_3) && (v.delta_ge_3 == cond);
    return v;
}

inline SeparabilityVerdict verify_separability(const FiniteGroup& g,
                                               const SolverOptions& opts = {}) {
    detail::require_p_group(g);
    return verify_separability(analyze_group(g, opts));
}

struct EqualityVerdict {
    int kappa = 0;
    CutValue ckappa = CutValue::infinite();
    bool equality_graph = false;  // kappa == ckappa, both finite
    CaseResult condition;
    bool condition_group = false;
    bool agree = false;
};

inline EqualityVerdict verify_connectivity_equality(const GroupAnalysis& a) {
    EqualityVerdict v;
    v.kappa = a.conn.kappa;
    v.ckappa = a.conn.ckappa;
    v.equality_graph = !v.ckappa.is_infinite() && v.kappa == v.ckappa.value();
    v.condition = equality_condition(*a.group);
    v.condition_group = v.condition.tag.has_value();
    v.agree = v.equality_graph == v.condition_group;
    return v;
}

inline EqualityVerdict verify_connectivity_equality(const FiniteGroup& g,
                                                    const SolverOptions& opts = {}) {
    detail::require_p_group(g);
    return verify_connectivity_equality(analyze_group(g, opts));
}

// For p-groups the enhanced power graph must be edge-identical to the power
// graph, and both verdicts must survive being recomputed on it.
struct EnhancedVerdict {
    bool equal_graphs = false;
    SeparabilityVerdict thm1_enhanced;
    EqualityVerdict thm2_enhanced;
    bool verdicts_match = false;
};

inline EnhancedVerdict verify_on_enhanced(const GroupAnalysis& a,
                                          const SolverOptions& opts = {}) {
    detail::require_p_group(*a.group);
    EnhancedVerdict v;
    v.equal_graphs = a.graphs_equal;

    GroupAnalysis b;
    b.group = a.group;
    b.p = a.p;
    b.delta = a.delta;
    b.num_maximal = a.num_maximal;
    b.power = a.enhanced;  // rerun all graph-side work on the enhanced graph
    b.enhanced = a.enhanced;
    b.graphs_equal = true;
    b.all_prime_power = a.all_prime_power;
    b.conn = connectivity_report(a.enhanced.graph, opts);

    v.thm1_enhanced = verify_separability(b);
    v.thm2_enhanced = verify_connectivity_equality(b);

    SeparabilityVerdict t1 = verify_separability(a);
    EqualityVerdict t2 = verify_connectivity_equality(a);
    v.verdicts_match = v.equal_graphs &&
                       v.thm1_enhanced.sep_graph == t1.sep_graph &&
                       v.thm1_enhanced.all_agree == t1.all_agree &&
                       v.thm2_enhanced.kappa == t2.kappa &&
                       v.thm2_enhanced.ckappa == t2.ckappa &&
                       v.thm2_enhanced.agree == t2.agree;
    return v;
}

enum class LemmaStatus { Holds, Fails, Skipped };

inline const char* lemma_status_name(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::Holds: return "holds";
        case LemmaStatus::Fails: return "fails";
        case LemmaStatus::Skipped: return "skipped";
    }
    return "?";
}

struct LemmaVerdict {
    std::string id;
    LemmaStatus status = LemmaStatus::Skipped;
    std::string detail;
};

struct LemmaOptions {
    int adjacency_pairs = 50;   // sampled subgroup pairs per group
    uint64_t seed = 12345;      // mixed with the group name per group
};

namespace detail {

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct AdjacencySample {
    long long samples = 0;
    long long violations = 0;
    std::string first_violation;
};

// Cross-subgroup non-adjacency: for subgroups H, K and x in H \ K,
// y in K \ H, the vertices x and y are never adjacent. Subgroup pairs are
// sampled; each (x, y) combination counts as one sample.
inline AdjacencySample sample_adjacency(const GroupAnalysis& a, int pairs,
                                        uint64_t seed) {
    AdjacencySample out;
    const FiniteGroup& g = *a.group;
    const auto& subs = g.cyclic_subgroups();
    if (subs.size() < 2 || pairs <= 0) return out;
    std::mt19937_64 rng(seed ^ fnv1a64(g.name()));
    auto member = [](const CyclicSubgroup& s, int x) {
        return std::binary_search(s.elements.begin(), s.elements.end(), x);
    };
    for (int t = 0; t < pairs; ++t) {
        size_t i = static_cast<size_t>(rng() % subs.size());
        size_t j = static_cast<size_t>(rng() % (subs.size() - 1));
        if (j >= i) ++j;
        const CyclicSubgroup& h = subs[i];
        const CyclicSubgroup& k = subs[j];
        for (int x : h.elements) {
            if (member(k, x)) continue;
            for (int y : k.elements) {
                if (member(h, y)) continue;
                ++out.samples;
                if (a.power.graph.adjacent(x, y)) {
                    ++out.violations;
                    if (out.first_violation.empty())
                        out.first_violation = "x=" + std::to_string(x) +
                                              " y=" + std::to_string(y);
                }
            }
        }
    }
    return out;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// The seven statements checked per group. The first three apply to every
// finite group; the remaining four only to p-groups (skipped otherwise).
inline std::vector<LemmaVerdict> lemma_suite(const GroupAnalysis& a,
                                             const LemmaOptions& opts = {}) {
    using detail::bool_str;
    std::vector<LemmaVerdict> out;
    const FiniteGroup& g = *a.group;
    auto push = [&](const std::string& id, LemmaStatus st, std::string detail) {
        out.push_back({id, st, std::move(detail)});
    };

    {
        bool complete = a.power.graph.is_complete();
        bool group_side =
            g.is_cyclic() && (g.order() == 1 || prime_power_base(g.order()).has_value());
        push("L-complete",
             complete == group_side ? LemmaStatus::Holds : LemmaStatus::Fails,
             "complete=" + bool_str(complete) +
                 " cyclic_prime_power=" + bool_str(group_side));
    }

    {
        detail::AdjacencySample s =
            detail::sample_adjacency(a, opts.adjacency_pairs, opts.seed);
        std::string d = "pairs=" + std::to_string(opts.adjacency_pairs) +
                        " samples=" + std::to_string(s.samples) +
                        " violations=" + std::to_string(s.violations);
        if (s.violations > 0) d += " first=" + s.first_violation;
        push("L-adjacency", s.violations == 0 ? LemmaStatus::Holds : LemmaStatus::Fails,
             std::move(d));
    }

    {
        bool ok = a.delta < 3 || a.conn.separable;
        push("L-delta3-sep", ok ? LemmaStatus::Holds : LemmaStatus::Fails,
             "delta=" + std::to_string(a.delta) +
                 " separable=" + bool_str(a.conn.separable));
    }

    if (!a.p) {
        const char* why = "requires a p-group";
        push("L-pgroup-conditions", LemmaStatus::Skipped, why);
        push("L-unique-p", LemmaStatus::Skipped, why);
        push("L-punctured-connected", LemmaStatus::Skipped, why);
        push("L-components-p", LemmaStatus::Skipped, why);
        return out;
    }
    int p = *a.p;

    {
        CaseResult c = separability_condition(g);
        bool ok = !c.tag || a.delta >= 3;
        push("L-pgroup-conditions", ok ? LemmaStatus::Holds : LemmaStatus::Fails,
             "case=" + (c.tag ? *c.tag : std::string("none")) +
                 " delta=" + std::to_string(a.delta));
    }

    bool cyclic = g.is_cyclic();
    bool gen_q = g.is_generalized_quaternion();

    {
        int cnt = g.count_subgroups_of_order_p(p);
        bool ok = (cnt == 1) == (cyclic || gen_q);
        push("L-unique-p", ok ? LemmaStatus::Holds : LemmaStatus::Fails,
             "subgroups_of_order_p=" + std::to_string(cnt) + " cyclic=" +
                 bool_str(cyclic) + " generalized_quaternion=" + bool_str(gen_q));
    }

    Graph star = punctured(a.power);

    {
        bool connected = is_connected(star);
        bool ok = connected == (cyclic || gen_q);
        push("L-punctured-connected", ok ? LemmaStatus::Holds : LemmaStatus::Fails,
             "connected=" + bool_str(connected) + " cyclic=" + bool_str(cyclic) +
                 " generalized_quaternion=" + bool_str(gen_q));
    }

    {
        // Each component of the punctured graph must contain exactly p - 1
        // elements of order p. Punctured vertex i is group element i + 1.
        ComponentDecomposition cd = components(star);
        std::string bad;
        for (size_t c = 0; c < cd.components.size() && bad.empty(); ++c) {
            int cnt = 0;
            for (int local : cd.components[c])
                if (g.element_order(local + 1) == p) ++cnt;
            if (cnt != p - 1)
                bad = "component " + std::to_string(c) + " has " +
                      std::to_string(cnt) + " elements of order p (expected " +
                      std::to_string(p - 1) + ")";
        }
        push("L-components-p", bad.empty() ? LemmaStatus::Holds : LemmaStatus::Fails,
             bad.empty() ? "components=" + std::to_string(cd.components.size()) +
                               " order_p_per_component=" + std::to_string(p - 1)
                         : bad);
    }
    return out;
}

// Observation-level data for the "delta >= 2" characterizations. The two
// quoted readings are recorded but not asserted; the provable form (at least
// two maximal cyclic subgroups of order > 2) is what tests pin down.
struct DeltaTwoReadings {
    bool delta_ge_2 = false;
    bool no_maximal_cyclic_of_order_2 = false;   // "cyclic" reading, right side
    bool no_lattice_maximal_of_order_2 = false;  // literal reading, right side
    bool two_maximal_cyclic_above_2 = false;     // corrected equivalent
    bool cyclic_reading_agrees = false;
    bool literal_reading_agrees = false;
    bool corrected_agrees = false;
};

inline DeltaTwoReadings delta_two_readings(const FiniteGroup& g) {
    DeltaTwoReadings r;
    r.delta_ge_2 = g.difference_number() >= 2;
    r.no_maximal_cyclic_of_order_2 = !g.has_maximal_cyclic_subgroup_of_order(2);
    r.no_lattice_maximal_of_order_2 = !g.has_lattice_maximal_subgroup_of_order_2();
    int above = 0;
    for (int i : g.maximal_cyclic_indices())
        if (g.cyclic_subgroups()[i].order > 2) ++above;
    r.two_maximal_cyclic_above_2 = above >= 2;
    r.cyclic_reading_agrees = r.delta_ge_2 == r.no_maximal_cyclic_of_order_2;
    r.literal_reading_agrees = r.delta_ge_2 == r.no_lattice_maximal_of_order_2;
    r.corrected_agrees = r.delta_ge_2 == r.two_maximal_cyclic_above_2;
    return r;
}

struct SurveyOptions {
    SolverOptions solver;
    LemmaOptions lemmas;
    int jobs = 1;
};

struct SurveyRow {
    std::string name;
    int order = 0;
    std::optional<int> p;
    std::vector<std::string> tags;
    int delta = 0;
    int num_maximal = 0;
    int kappa = 0;
    CutValue ckappa = CutValue::infinite();
    int min_degree = 0;
    int edge_connectivity = 0;
    bool separable = false;
    bool power_equals_enhanced = false;
    bool all_prime_power = false;
    bool edge_conn_equals_min_degree = false;
    std::optional<SeparabilityVerdict> thm1;
    std::optional<EqualityVerdict> thm2;
    std::optional<EnhancedVerdict> remark;
    std::vector<LemmaVerdict> lemmas;
    bool converse_counterexample = false;  // separable yet delta < 3
    DeltaTwoReadings delta2;
    std::string status = "ok";  // "ok" | "skipped:size" | "error"
    std::string failure;        // first disagreement, empty when clean
};

struct SurveyReport {
    std::vector<SurveyRow> rows;
    int groups = 0;
    int disagreements = 0;
    int lemma_failures = 0;
    int skipped = 0;
    std::vector<std::string> converse_counterexamples;
};

namespace detail {

inline SurveyRow survey_row(const CatalogEntry& entry, const SurveyOptions& opts) {
    SurveyRow row;
    row.name = entry.name;
    row.order = entry.order;
    row.tags = entry.tags;
    try {
        FiniteGroup g = build_group(entry.spec);
        row.p = g.p_group_prime();
        row.delta = g.difference_number();
        row.num_maximal = static_cast<int>(g.maximal_cyclic_indices().size());
        row.delta2 = delta_two_readings(g);

        GroupAnalysis a = analyze_group(g, opts.solver);
        row.kappa = a.conn.kappa;
        row.ckappa = a.conn.ckappa;
        row.min_degree = a.conn.min_degree;
        row.edge_connectivity = a.conn.edge_connectivity.value_or(0);
        row.separable = a.conn.separable;
        row.power_equals_enhanced = a.graphs_equal;
        row.all_prime_power = a.all_prime_power;
        row.edge_conn_equals_min_degree =
            a.conn.edge_connectivity && *a.conn.edge_connectivity == a.conn.min_degree;
        row.converse_counterexample = a.conn.separable && a.delta < 3;

        auto note_failure = [&](const std::string& what) {
            if (row.failure.empty()) row.failure = what;
        };

        if (auto bad = verify_report_witnesses(a.power.graph, a.conn))
            note_failure("witness validation: " + *bad);
        if (!row.edge_conn_equals_min_degree)
            note_failure("edge connectivity != min degree");

        if (row.p) {
            row.thm1 = verify_separability(a);
            row.thm2 = verify_connectivity_equality(a);
            row.remark = verify_on_enhanced(a, opts.solver);
            if (!row.thm1->all_agree)
                note_failure("separability characterization disagreement");
            if (!row.thm2->agree)
                note_failure("connectivity equality characterization disagreement");
            if (!row.remark->equal_graphs)
                note_failure("enhanced power graph differs on a prime-power group");
            if (!row.remark->verdicts_match)
                note_failure("enhanced-graph verdicts differ from power-graph verdicts");
        } else if (edge_identical(a.power.graph, a.enhanced.graph) !=
                   a.all_prime_power) {
            note_failure("power/enhanced equality mismatches the order criterion");
        }

        row.lemmas = lemma_suite(a, opts.lemmas);
        for (const auto& lv : row.lemmas)
            if (lv.status == LemmaStatus::Fails)
                note_failure(lv.id + ": " + lv.detail);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InstanceTooLargeForExact) {
            row.status = "skipped:size";
        } else {
            row.status = "error";
        }
        row.failure = e.what();
    } catch (const std::exception& e) {
        row.status = "error";
        row.failure = e.what();
    }
    return row;
}

}  // namespace detail

inline SurveyReport survey(const std::vector<CatalogEntry>& entries,
                           const SurveyOptions& opts = {}) {
    SurveyReport report;
    report.rows.resize(entries.size());
    int jobs = std::max(1, opts.jobs);

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            report.rows[i] = detail::survey_row(entries[i], opts);
        }
    };
    if (jobs == 1 || entries.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int spawn = std::min<int>(jobs, static_cast<int>(entries.size()));
        pool.reserve(static_cast<size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.groups = static_cast<int>(report.rows.size());
    for (const auto& row : report.rows) {
        if (row.status == "skipped:size") {
            ++report.skipped;
            continue;
        }
        if (row.status == "error" || !row.failure.empty()) ++report.disagreements;
        for (const auto& lv : row.lemmas)
            if (lv.status == LemmaStatus::Fails) ++report.lemma_failures;
        if (row.converse_counterexample)
            report.converse_counterexamples.push_back(row.name);
    }
    return report;
}

}  // namespace pglab
