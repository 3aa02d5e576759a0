#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pglab/group.hpp"

using namespace pglab;

namespace {

// Cayley table of Z_n under addition, with identity at index 0.
std::vector<std::vector<int>> mod_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// Klein four-group as bitwise xor on {0,1,2,3}.
std::vector<std::vector<int>> klein_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return t;
}

}  // namespace

TEST_CASE("primality and prime-power helpers", "[group]") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(91));  // 7 * 13

    CHECK(prime_power_base(1) == std::nullopt);
    CHECK(prime_power_base(8).value() == 2);
    CHECK(prime_power_base(81).value() == 3);
    CHECK(prime_power_base(7).value() == 7);
    CHECK(prime_power_base(12) == std::nullopt);
    CHECK(prime_power_base(6) == std::nullopt);
}

TEST_CASE("table validation accepts cyclic groups", "[group]") {
    auto g = FiniteGroup::from_table(mod_table(5), "Z5");
    CHECK(g.order() == 5);
    CHECK(g.is_cyclic());
    CHECK(g.inverse(2) == 3);
    for (int x = 0; x < 5; ++x) CHECK(g.product(x, g.inverse(x)) == 0);
}

TEST_CASE("table validation rejects a non-associative Latin square", "[group]") {
    // A Latin square with identity row/column that is not a group table.
    std::vector<std::vector<int>> t = {
        {0, 1, 2, 3, 4},
        {1, 0, 3, 4, 2},
        {2, 3, 4, 0, 1},
        {3, 4, 1, 2, 0},
        {4, 2, 0, 1, 3},
    };
    try {
        FiniteGroup::from_table(t, "bad");
        FAIL("expected NotAssociative");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAssociative);
        // The message names a concrete witness triple.
        std::string msg = e.what();
        CHECK(msg.find("a=") != std::string::npos);
        CHECK(msg.find("b=") != std::string::npos);
        CHECK(msg.find("c=") != std::string::npos);
    }
}

TEST_CASE("table validation rejects non-Latin input", "[group]") {
    auto t = mod_table(4);
    t[2][3] = t[2][0];  // duplicate value in a row
    CHECK_THROWS_AS(FiniteGroup::from_table(t, "bad"), Error);
    try {
        FiniteGroup::from_table(t, "bad");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotLatinSquare);
    }
}

TEST_CASE("identity is relabeled to index zero", "[group]") {
    // Z3 with elements renamed so the identity sits at index 2.
    // perm maps canonical 0,1,2 -> 2,0,1.
    std::vector<int> perm = {2, 0, 1};
    std::vector<std::vector<int>> t(3, std::vector<int>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t[perm[a]][perm[b]] = perm[(a + b) % 3];
    auto g = FiniteGroup::from_table(t, "Z3-shuffled");
    CHECK(g.order() == 3);
    for (int x = 0; x < 3; ++x) {
        CHECK(g.product(0, x) == x);
        CHECK(g.product(x, 0) == x);
    }
    CHECK(g.is_cyclic());
}

TEST_CASE("element orders and power closures in Z12", "[group]") {
    auto g = FiniteGroup::from_table(mod_table(12), "Z12");
    CHECK(g.element_order(0) == 1);
    CHECK(g.element_order(1) == 12);
    CHECK(g.element_order(2) == 6);
    CHECK(g.element_order(3) == 4);
    CHECK(g.element_order(4) == 3);
    CHECK(g.element_order(6) == 2);

    auto c3 = g.power_closure(4);
    CHECK(c3.count() == 3);
    CHECK(c3.test(0));
    CHECK(c3.test(4));
    CHECK(c3.test(8));
}

TEST_CASE("cyclic subgroup inventory of Z12", "[group]") {
    auto g = FiniteGroup::from_table(mod_table(12), "Z12");
    const auto& subs = g.cyclic_subgroups();
    // One cyclic subgroup per divisor of 12.
    CHECK(subs.size() == 6);
    std::multiset<int> orders;
    for (const auto& s : subs) orders.insert(s.order);
    CHECK(orders == std::multiset<int>{1, 2, 3, 4, 6, 12});

    // Sorted by (order, elements) and generators listed for each subgroup.
    CHECK(std::is_sorted(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
        return a.order != b.order ? a.order < b.order : a.elements < b.elements;
    }));
    const auto& whole = subs.back();
    CHECK(whole.order == 12);
    CHECK(whole.generators.size() == 4);  // phi(12)

    auto maximal = g.maximal_cyclic_indices();
    REQUIRE(maximal.size() == 1);
    CHECK(subs[maximal[0]].order == 12);
    CHECK(g.difference_number() == 0);  // cyclic convention
}

TEST_CASE("difference helper counts one-sided set differences", "[group]") {
    CyclicSubgroup a{{0, 1, 2, 3}, {1}, 4};
    CyclicSubgroup b{{0, 4, 5}, {4}, 3};
    // |a \ b| = 3, |b \ a| = 2 -> min is 2; symmetric in its arguments.
    CHECK(difference_d(a, b) == 2);
    CHECK(difference_d(b, a) == 2);

    // c is contained in a, so the one-sided minimum is 0.
    CyclicSubgroup c{{0, 2}, {2}, 2};
    CHECK(difference_d(a, c) == 0);
}

TEST_CASE("Klein four-group invariants", "[group]") {
    auto g = FiniteGroup::from_table(klein_table(), "V4");
    CHECK(g.order() == 4);
    CHECK_FALSE(g.is_cyclic());
    CHECK(g.p_group_prime().value() == 2);
    CHECK(g.count_subgroups_of_order_p(2) == 3);
    CHECK(g.maximal_cyclic_indices().size() == 3);
    CHECK(g.difference_number() == 1);
    CHECK_FALSE(g.is_generalized_quaternion());
}

TEST_CASE("Z6 is not a p-group", "[group]") {
    auto g = FiniteGroup::from_table(mod_table(6), "Z6");
    CHECK(g.p_group_prime() == std::nullopt);
    CHECK(g.is_cyclic());
    CHECK(g.difference_number() == 0);
}

TEST_CASE("subgroup closure from generators", "[group]") {
    auto g = FiniteGroup::from_table(mod_table(12), "Z12");
    auto h = g.subgroup_closure({4, 6});
    // <4,6> = <2> in Z12.
    CHECK(h == std::vector<int>{0, 2, 4, 6, 8, 10});

    auto trivial = g.subgroup_closure({});
    CHECK(trivial == std::vector<int>{0});
}

TEST_CASE("maximal-subgroup-of-order-2 probes", "[group]") {
    // V4: every order-2 subgroup is maximal both among cyclic subgroups and in
    // the full subgroup lattice.
    auto v4 = FiniteGroup::from_table(klein_table(), "V4");
    CHECK(v4.has_maximal_cyclic_subgroup_of_order(2));
    CHECK(v4.has_lattice_maximal_subgroup_of_order_2());

    // Z4: {0,2} is not maximal-cyclic (inside Z4 itself) but IS lattice-maximal
    // (nothing strictly between it and the whole group).
    auto z4 = FiniteGroup::from_table(mod_table(4), "Z4");
    CHECK_FALSE(z4.has_maximal_cyclic_subgroup_of_order(2));
    CHECK(z4.has_lattice_maximal_subgroup_of_order_2());

    // Z8: {0,4} < {0,2,4,6} < Z8, so neither kind of maximality holds.
    auto z8 = FiniteGroup::from_table(mod_table(8), "Z8");
    CHECK_FALSE(z8.has_maximal_cyclic_subgroup_of_order(2));
    CHECK_FALSE(z8.has_lattice_maximal_subgroup_of_order_2());
}

TEST_CASE("from_table_trusted matches validated construction", "[group]") {
    auto a = FiniteGroup::from_table(mod_table(8), "Z8");
    auto b = FiniteGroup::from_table_trusted(mod_table(8), "Z8");
    CHECK(a.order() == b.order());
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) CHECK(a.product(x, y) == b.product(x, y));
}
