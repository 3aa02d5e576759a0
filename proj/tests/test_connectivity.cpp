#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "pglab/connectivity.hpp"
#include "pglab/families.hpp"
#include "pglab/power_graph.hpp"

using namespace pglab;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// n <= 12 random graph with edge probability p, deterministic for a seed.
Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    int threshold = static_cast<int>(p * 1000);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 1000) < threshold) g.add_edge(i, j);
    return g;
}

// Independent kappa oracle: smallest deleted subset that disconnects, found by
// exhaustive search over subsets in increasing size.
int brute_force_kappa(const Graph& g) {
    int n = g.num_vertices();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    std::vector<int> idx;
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            if (!is_connected(delete_vertices(g, comb))) return k;
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return n - 1;
}

}  // namespace

TEST_CASE("vertex connectivity on standard graphs", "[connectivity]") {
    CHECK(vertex_connectivity(path_graph(5)).value == 1);
    CHECK(vertex_connectivity(cycle_graph(5)).value == 2);
    CHECK(vertex_connectivity(cycle_graph(4)).value == 2);
    CHECK(vertex_connectivity(complete_graph(5)).value == 4);
    CHECK(vertex_connectivity(petersen()).value == 3);

    // K_{3,3}
    Graph k33(6);
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
    CHECK(vertex_connectivity(k33).value == 3);

    // Star K_{1,4}
    Graph star(5);
    for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
    auto s = vertex_connectivity(star);
    CHECK(s.value == 1);
    REQUIRE(s.cutset.has_value());
    CHECK(*s.cutset == std::vector<int>{0});

    // Disconnected graph and trivial cases.
    Graph two(2);
    CHECK(vertex_connectivity(two).value == 0);
    CHECK(vertex_connectivity(Graph(1)).value == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(0)), Error);
}

TEST_CASE("kappa cutsets disconnect the graph", "[connectivity]") {
    for (const Graph& g : {path_graph(6), cycle_graph(7), petersen()}) {
        auto r = vertex_connectivity(g);
        REQUIRE(r.cutset.has_value());
        CHECK(static_cast<int>(r.cutset->size()) == r.value);
        CHECK_FALSE(is_connected(delete_vertices(g, *r.cutset)));
    }
    // Complete graphs have no cutset.
    CHECK_FALSE(vertex_connectivity(complete_graph(4)).cutset.has_value());
}

TEST_CASE("edge connectivity on standard graphs", "[connectivity]") {
    CHECK(edge_connectivity(cycle_graph(5)) == 2);
    CHECK(edge_connectivity(path_graph(4)) == 1);
    CHECK(edge_connectivity(complete_graph(5)) == 4);
    CHECK(edge_connectivity(petersen()) == 3);

    // Two triangles joined by a single bridge: lambda = 1 even though the
    // minimum degree is 2.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    g.add_edge(2, 3);
    CHECK(edge_connectivity(g) == 1);
    CHECK(g.min_degree() == 2);

    Graph disc(3);
    disc.add_edge(0, 1);
    CHECK(edge_connectivity(disc) == 0);
}

TEST_CASE("minimum vertex cut between terminal sets", "[connectivity]") {
    auto p5 = path_graph(5);
    auto r = min_vertex_cut_between_sets(p5, {0}, {4});
    REQUIRE_FALSE(r.value.is_infinite());
    CHECK(r.value.value() == 1);
    REQUIRE(r.cut.size() == 1);
    CHECK((r.cut[0] >= 1 && r.cut[0] <= 3));

    // Adjacent terminals can never be separated by vertex deletion.
    auto k4 = complete_graph(4);
    CHECK(min_vertex_cut_between_sets(k4, {0}, {1}).value.is_infinite());

    // Overlapping or empty terminal sets are rejected.
    CHECK_THROWS_AS(min_vertex_cut_between_sets(p5, {0, 2}, {2, 4}), Error);
    CHECK_THROWS_AS(min_vertex_cut_between_sets(p5, {}, {4}), Error);

    // Petersen: outer cycle vs inner pentagram are joined by the 5 spokes.
    auto r2 = min_vertex_cut_between_sets(petersen(), {0, 1, 2, 3, 4},
                                          {5, 6, 7, 8, 9});
    CHECK(r2.value.is_infinite());  // every outer vertex touches an inner one

    // C6 split into two opposite vertices.
    auto r3 = min_vertex_cut_between_sets(cycle_graph(6), {0}, {3});
    CHECK(r3.value.value() == 2);
    CHECK(r3.cut.size() == 2);
}

TEST_CASE("fast kappa agrees with subset oracle on random graphs",
          "[connectivity]") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1) ? 0.5 : 0.8;
        Graph g = random_graph(rng, n, p);
        INFO("trial " << trial << " n=" << n << " p=" << p);
        CHECK(vertex_connectivity(g).value == brute_force_kappa(g));
    }
}

TEST_CASE("brute-force cyclic connectivity on known graphs", "[connectivity]") {
    // Two vertex-disjoint triangles: the empty set is already a cyclic cutset.
    auto two_triangles = disjoint_union({cycle_graph(3), cycle_graph(3)});
    auto r = brute_force_ckappa(two_triangles);
    REQUIRE_FALSE(r.value.is_infinite());
    CHECK(r.value.value() == 0);
    REQUIRE(r.cutset.has_value());
    CHECK(r.cutset->empty());

    // A single cycle has no cyclic cutset at all.
    CHECK(brute_force_ckappa(cycle_graph(6)).value.is_infinite());
    CHECK(brute_force_ckappa(complete_graph(4)).value.is_infinite());
    CHECK(brute_force_ckappa(complete_graph(5)).value.is_infinite());

    // Two triangles linked through one articulation vertex: delete it.
    Graph barbell(7);
    barbell.add_edge(0, 1);
    barbell.add_edge(1, 2);
    barbell.add_edge(2, 0);
    barbell.add_edge(4, 5);
    barbell.add_edge(5, 6);
    barbell.add_edge(6, 4);
    barbell.add_edge(2, 3);
    barbell.add_edge(3, 4);
    auto rb = brute_force_ckappa(barbell);
    CHECK(rb.value.value() == 1);
    REQUIRE(rb.cutset.has_value());
    CHECK(*rb.cutset == std::vector<int>{3});
    CHECK(is_cyclic_vertex_cutset(barbell, *rb.cutset));
    CHECK_FALSE(is_cyclic_vertex_cutset(barbell, {2}));

    // Size guard.
    CHECK_THROWS_AS(brute_force_ckappa(cycle_graph(20), 16), Error);
}

TEST_CASE("petersen graph cyclic connectivity", "[connectivity]") {
    auto g = petersen();
    auto brute = brute_force_ckappa(g);
    auto fast = cyclic_vertex_connectivity(g);
    CHECK(fast.value == brute.value);
    auto sep = cyclically_separable(g);
    CHECK(sep.separable == !brute.value.is_infinite());
    if (fast.cutset) {
        CHECK(is_cyclic_vertex_cutset(g, *fast.cutset));
        CHECK(static_cast<int>(fast.cutset->size()) == fast.value.value());
    }
}

TEST_CASE("fast cyclic solvers agree with brute force on random graphs",
          "[connectivity]") {
    std::mt19937 rng(909090);
    int separable_seen = 0, infinite_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);  // 5..12
        double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1) ? 0.4 : 0.6;
        Graph g = random_graph(rng, n, p);
        INFO("trial " << trial << " n=" << n << " p=" << p);
        auto brute = brute_force_ckappa(g);
        auto fast = cyclic_vertex_connectivity(g);
        CHECK(fast.value == brute.value);
        auto sep = cyclically_separable(g);
        CHECK(sep.separable == !brute.value.is_infinite());
        if (sep.separable) ++separable_seen;
        else ++infinite_seen;
        if (fast.cutset) {
            CHECK(is_cyclic_vertex_cutset(g, *fast.cutset));
            CHECK(static_cast<int>(fast.cutset->size()) == fast.value.value());
        }
        if (sep.witness) {
            // Witness cycles are disjoint and mutually non-adjacent.
            DynBitset nb1 = detail::closed_neighborhood(g, sep.witness->first);
            for (int v : sep.witness->second) CHECK_FALSE(nb1.test(v));
        }
    }
    // Dense small graphs are rarely separable; add two-cluster instances with
    // a few random cross edges so both outcomes are well represented.
    for (int trial = 0; trial < 40; ++trial) {
        int n1 = 4 + static_cast<int>(rng() % 3);
        int n2 = 4 + static_cast<int>(rng() % 3);
        Graph g = disjoint_union(
            {random_graph(rng, n1, 0.7), random_graph(rng, n2, 0.7)});
        int bridges = 1 + static_cast<int>(rng() % 3);
        for (int b = 0; b < bridges; ++b) {
            int u = static_cast<int>(rng() % n1);
            int v = n1 + static_cast<int>(rng() % n2);
            g.add_edge(u, v);
        }
        INFO("cluster trial " << trial << " n=" << n1 + n2);
        auto brute = brute_force_ckappa(g);
        auto fast = cyclic_vertex_connectivity(g);
        CHECK(fast.value == brute.value);
        CHECK(cyclically_separable(g).separable == !brute.value.is_infinite());
        if (!brute.value.is_infinite()) ++separable_seen;
        else ++infinite_seen;
        if (fast.cutset) CHECK(is_cyclic_vertex_cutset(g, *fast.cutset));
    }
    // The combined sample must exercise both outcomes.
    CHECK(separable_seen >= 10);
    CHECK(infinite_seen >= 10);
}

TEST_CASE("long chordless cycles exceed the default bound but still resolve",
          "[connectivity]") {
    // Two 8-cycles joined through one middle vertex; every chordless cycle has
    // length 8, beyond the default candidate bound of 6.
    Graph g(17);
    for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
    for (int i = 0; i < 8; ++i) g.add_edge(8 + i, 8 + (i + 1) % 8);
    g.add_edge(16, 0);
    g.add_edge(16, 8);

    // Default options: 17 vertices exceeds the brute-force fallback limit.
    CHECK_THROWS_AS(cyclic_vertex_connectivity(g), Error);
    try {
        cyclic_vertex_connectivity(g);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InstanceTooLargeForExact);
    }

    // Raising the cycle bound lets the candidate enumeration finish exactly.
    SolverOptions wide;
    wide.cycle_bound = 8;
    auto r = cyclic_vertex_connectivity(g, wide);
    CHECK(r.value.value() == 1);
    REQUIRE(r.cutset.has_value());
    CHECK(*r.cutset == std::vector<int>{16});

    // Raising the brute-force limit instead also resolves it.
    SolverOptions brute;
    brute.brute_force_limit = 17;
    auto r2 = cyclic_vertex_connectivity(g, brute);
    CHECK(r2.value.value() == 1);

    // Separability never needs the bound: the unbounded fallback finds the
    // cycle pair.
    auto sep = cyclically_separable(g);
    CHECK(sep.separable);
    REQUIRE(sep.witness.has_value());
}

TEST_CASE("connectivity report on power graphs matches pinned values",
          "[connectivity]") {
    struct Expected {
        FamilySpec spec;
        int kappa;
        CutValue ckappa;
        bool separable;
        long long edges;
    };
    const Expected table[] = {
        {FamilySpec::dicyclic(2), 2, CutValue::infinite(), false, 16},
        {FamilySpec::dicyclic(4), 2, CutValue::infinite(), false, 0},
        {FamilySpec::product({FamilySpec::cyclic(9), FamilySpec::cyclic(3)}), 1,
         CutValue::finite(3), true, 111},
        {FamilySpec::product({FamilySpec::cyclic(3), FamilySpec::cyclic(3)}), 1,
         CutValue::infinite(), false, 12},
        {FamilySpec::product({FamilySpec::cyclic(5), FamilySpec::cyclic(5)}), 1,
         CutValue::finite(1), true, 0},
        {FamilySpec::product({FamilySpec::cyclic(2), FamilySpec::cyclic(8)}), 1,
         CutValue::finite(4), true, 0},
        {FamilySpec::modular(2, 4), 1, CutValue::finite(4), true, 0},
        {FamilySpec::dihedral(20), 1, CutValue::finite(13), true, 190},
        {FamilySpec::product(
             {FamilySpec::cyclic(2), FamilySpec::cyclic(2), FamilySpec::cyclic(2)}),
         1, CutValue::infinite(), false, 7},
    };
    for (const auto& e : table) {
        auto g = build_group(e.spec);
        auto pg = power_graph(g);
        auto rep = connectivity_report(pg.graph);
        INFO(g.name());
        CHECK(rep.kappa == e.kappa);
        CHECK(rep.ckappa == e.ckappa);
        CHECK(rep.separable == e.separable);
        if (e.edges > 0) CHECK(pg.graph.num_edges() == e.edges);
        REQUIRE(rep.edge_connectivity.has_value());
        CHECK(*rep.edge_connectivity == rep.min_degree);
        auto problem = verify_report_witnesses(pg.graph, rep);
        if (problem) INFO("witness problem: " << *problem);
        CHECK_FALSE(problem.has_value());
    }
}

TEST_CASE("cyclic connectivity of complete graphs is infinite", "[connectivity]") {
    // In K_n any two vertex-disjoint cycles are adjacent, so no cyclic cutset
    // can exist regardless of size.
    for (int n : {4, 5, 6, 9, 12}) {
        auto r = cyclic_vertex_connectivity(complete_graph(n));
        CHECK(r.value.is_infinite());
        CHECK_FALSE(cyclically_separable(complete_graph(n)).separable);
    }
}

TEST_CASE("relabeling vertices does not change connectivity invariants",
          "[connectivity]") {
    auto g = power_graph(build_group(
                             FamilySpec::product({FamilySpec::cyclic(9),
                                                  FamilySpec::cyclic(3)})))
                 .graph;
    int n = g.num_vertices();
    std::mt19937 rng(4242);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);

    auto rg = connectivity_report(g);
    auto rh = connectivity_report(h);
    CHECK(rg.kappa == rh.kappa);
    CHECK(rg.ckappa == rh.ckappa);
    CHECK(rg.separable == rh.separable);
    CHECK(rg.min_degree == rh.min_degree);
    CHECK(*rg.edge_connectivity == *rh.edge_connectivity);
}
