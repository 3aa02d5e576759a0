#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "pglab/families.hpp"
#include "pglab/power_graph.hpp"

using namespace pglab;

namespace {

// Oracle straight from the definition: x ~ y iff one is a power of the other,
// computed by repeated multiplication without any subgroup machinery.
bool power_adjacent_oracle(const FiniteGroup& g, int x, int y) {
    if (x == y) return false;
    for (int base : {x, y}) {
        int other = (base == x) ? y : x;
        int acc = 0;  // identity
        for (int k = 0; k < g.order(); ++k) {
            acc = g.product(acc, base);
            if (acc == other) return true;
        }
    }
    return false;
}

// Oracle for the enhanced graph: x ~ y iff some single element generates both,
// i.e. x and y lie in a common cyclic subgroup.
bool enhanced_adjacent_oracle(const FiniteGroup& g, int x, int y) {
    if (x == y) return false;
    for (int z = 0; z < g.order(); ++z) {
        const DynBitset& gen = g.power_closure(z);
        if (gen.test(x) && gen.test(y)) return true;
    }
    return false;
}

void check_against_oracles(const FiniteGroup& g) {
    auto pg = power_graph(g);
    auto eg = enhanced_power_graph(g);
    INFO("group " << g.name());
    for (int x = 0; x < g.order(); ++x) {
        for (int y = x + 1; y < g.order(); ++y) {
            INFO("pair (" << x << "," << y << ")");
            CHECK(pg.graph.adjacent(x, y) == power_adjacent_oracle(g, x, y));
            CHECK(eg.graph.adjacent(x, y) == enhanced_adjacent_oracle(g, x, y));
        }
    }
}

}  // namespace

TEST_CASE("power and enhanced graphs match definition oracles", "[powergraph]") {
    for (auto spec :
         {FamilySpec::cyclic(12), FamilySpec::cyclic(6), FamilySpec::dihedral(3),
          FamilySpec::dihedral(4), FamilySpec::dicyclic(2), FamilySpec::dicyclic(3),
          FamilySpec::product({FamilySpec::cyclic(4), FamilySpec::cyclic(2)}),
          FamilySpec::product({FamilySpec::cyclic(3), FamilySpec::cyclic(3)}),
          FamilySpec::semidihedral(4), FamilySpec::modular(3, 3),
          FamilySpec::heisenberg(3), FamilySpec::cyclic(15)}) {
        check_against_oracles(build_group(spec));
    }
}

TEST_CASE("power graph of a cyclic p-group is complete", "[powergraph]") {
    for (int n : {2, 3, 4, 5, 7, 8, 9, 16, 27}) {
        auto g = build_group(FamilySpec::cyclic(n));
        auto pg = power_graph(g);
        INFO("Z" << n);
        CHECK(pg.graph.is_complete());
    }
    // Cyclic of non-prime-power order: connected but not complete.
    auto z6 = power_graph(build_group(FamilySpec::cyclic(6)));
    CHECK_FALSE(z6.graph.is_complete());
    CHECK(z6.graph.num_edges() == 13);
    // Its enhanced graph IS complete (the whole group is one cyclic subgroup).
    auto e6 = enhanced_power_graph(build_group(FamilySpec::cyclic(6)));
    CHECK(e6.graph.is_complete());
    CHECK(e6.graph.num_edges() == 15);
}

TEST_CASE("quaternion power graph edge count and structure", "[powergraph]") {
    auto g = build_group(FamilySpec::dicyclic(2));
    auto pg = power_graph(g);
    CHECK(pg.graph.num_vertices() == 8);
    // Identity and the unique involution are adjacent to everything (degree 7);
    // the six order-4 elements see their own 4-cycle subgroup only (degree 3).
    // Sum of degrees = 2*7 + 6*3 = 32, so 16 edges.
    CHECK(pg.graph.num_edges() == 16);
    int deg7 = 0, deg3 = 0;
    for (int v = 0; v < 8; ++v) {
        if (pg.graph.degree(v) == 7) ++deg7;
        if (pg.graph.degree(v) == 3) ++deg3;
    }
    CHECK(deg7 == 2);
    CHECK(deg3 == 6);
    CHECK(pg.kind == PowerGraphKind::Power);
}

TEST_CASE("vertex labels name the element and its order", "[powergraph]") {
    auto g = build_group(FamilySpec::dicyclic(2));
    auto pg = power_graph(g);
    CHECK(pg.graph.label(0) == "g0(ord 1)");
    bool saw_ord4 = false;
    for (int v = 1; v < 8; ++v) {
        std::string lab = pg.graph.label(v);
        CHECK(lab.substr(0, 1) == "g");
        if (lab.find("(ord 4)") != std::string::npos) saw_ord4 = true;
    }
    CHECK(saw_ord4);
}

TEST_CASE("puncturing removes the identity and shifts vertices", "[powergraph]") {
    auto g = build_group(FamilySpec::cyclic(6));
    auto pg = power_graph(g);
    auto star = punctured(pg);
    CHECK(star.num_vertices() == 5);
    // Punctured vertex i corresponds to group element i+1.
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(star.adjacent(i, j) == pg.graph.adjacent(i + 1, j + 1));

    // P(Z6) minus identity stays connected (5 is adjacent to 1, 2,... via powers),
    // while P(Z2xZ2) minus identity is edgeless.
    auto v4 = power_graph(build_group(
        FamilySpec::product({FamilySpec::cyclic(2), FamilySpec::cyclic(2)})));
    auto v4star = punctured(v4);
    CHECK(v4star.num_vertices() == 3);
    CHECK(v4star.num_edges() == 0);
}

TEST_CASE("power equals enhanced exactly for prime-power cyclic-subgroup orders",
          "[powergraph]") {
    // p-groups: all cyclic subgroup orders are prime powers, graphs coincide.
    for (auto spec : {FamilySpec::dicyclic(2), FamilySpec::cyclic(9),
                      FamilySpec::semidihedral(4), FamilySpec::heisenberg(3)}) {
        auto g = build_group(spec);
        auto [equal, predicted] = power_equals_enhanced(g);
        INFO(g.name());
        CHECK(equal);
        CHECK(predicted);
        CHECK(all_cyclic_subgroups_prime_power(g));
    }
    // Z6 and dihedral(15) contain cyclic subgroups of non-prime-power order.
    for (auto spec : {FamilySpec::cyclic(6), FamilySpec::dihedral(15)}) {
        auto g = build_group(spec);
        auto [equal, predicted] = power_equals_enhanced(g);
        INFO(g.name());
        CHECK_FALSE(equal);
        CHECK_FALSE(predicted);
        CHECK_FALSE(all_cyclic_subgroups_prime_power(g));
    }
    // S3 (= dihedral(3)): every cyclic subgroup has order 1, 2 or 3, so the two
    // graphs agree even though the group is not a p-group.
    auto s3 = build_group(FamilySpec::dihedral(3));
    auto [equal, predicted] = power_equals_enhanced(s3);
    CHECK(equal);
    CHECK(predicted);
}

TEST_CASE("power graph carries a handle to its group", "[powergraph]") {
    auto g = build_group(FamilySpec::cyclic(8));
    auto pg = power_graph(g);
    REQUIRE(pg.group != nullptr);
    CHECK(pg.group->order() == 8);
    CHECK(pg.group->name() == "Z8");
}
