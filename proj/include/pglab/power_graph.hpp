#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pglab/graph.hpp"
#include "pglab/group.hpp"

namespace pglab {

enum class PowerGraphKind { Power, Enhanced };

// A graph built from a group, keeping hold of that group. Vertex i is group
// element i; labels are "g<i>(ord <k>)".
struct PowerGraph {
    Graph graph;
    std::shared_ptr<const FiniteGroup> group;
    PowerGraphKind kind = PowerGraphKind::Power;
};

namespace detail {

inline std::vector<std::string> element_labels(const FiniteGroup& g) {
    std::vector<std::string> labels;
    labels.reserve(g.order());
    for (int i = 0; i < g.order(); ++i)
        labels.push_back("g" + std::to_string(i) + "(ord " +
                         std::to_string(g.element_order(i)) + ")");
    return labels;
}

}  // namespace detail

// x ~ y iff one is a power of the other, i.e. x in <y> or y in <x>.
inline PowerGraph power_graph(const FiniteGroup& g) {
    int n = g.order();
    Graph graph(n, detail::element_labels(g));
    for (int x = 0; x < n; ++x) {
        const DynBitset& cx = g.power_closure(x);
        for (int y = x + 1; y < n; ++y)
            if (cx.test(y) || g.power_closure(y).test(x)) graph.add_edge(x, y);
    }
    return {std::move(graph), std::make_shared<const FiniteGroup>(g),
            PowerGraphKind::Power};
}

// x ~ y iff some cyclic subgroup contains both, i.e. both are powers of a
// common z.
inline PowerGraph enhanced_power_graph(const FiniteGroup& g) {
    int n = g.order();
    Graph graph(n, detail::element_labels(g));
    for (int z = 0; z < n; ++z) {
        const DynBitset& cz = g.power_closure(z);
        for (int x = cz.next(0); x >= 0; x = cz.next(x + 1))
            for (int y = cz.next(x + 1); y >= 0; y = cz.next(y + 1))
                if (!graph.adjacent(x, y)) graph.add_edge(x, y);
    }
    return {std::move(graph), std::make_shared<const FiniteGroup>(g),
            PowerGraphKind::Enhanced};
}

// The graph with the identity vertex removed (vertex 0; the group keeps the
// identity at index 0 by construction).
inline Graph punctured(const PowerGraph& pg) {
    return delete_vertices(pg.graph, {0});
}

// Group-side criterion for power graph == enhanced power graph: every
// element order is 1 or a prime power, so every cyclic subgroup is one.
inline bool all_cyclic_subgroups_prime_power(const FiniteGroup& g) {
    for (int x = 0; x < g.order(); ++x) {
        int ord = g.element_order(x);
        if (ord != 1 && !prime_power_base(ord)) return false;
    }
    return true;
}

// Edge-for-edge comparison of the two graphs, paired with the group-side
// prediction for cross checking.
inline std::pair<bool, bool> power_equals_enhanced(const FiniteGroup& g) {
    PowerGraph p = power_graph(g);
    PowerGraph e = enhanced_power_graph(g);
    bool equal = true;
    for (int x = 0; x < g.order() && equal; ++x)
        if (!(p.graph.neighbors(x) == e.graph.neighbors(x))) equal = false;
    return {equal, all_cyclic_subgroups_prime_power(g)};
}

}  // namespace pglab
