#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pglab/bitset.hpp"
#include "pglab/errors.hpp"

namespace pglab {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset
// row per vertex. No self loops. Construction fills in edges; afterwards the
// graph is treated as immutable and all operations below are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::vector<std::string> labels = {})
        : n_(n), rows_(n, DynBitset(n)), labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(n);
            for (int i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i));
        }
    }

    int num_vertices() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            raise(ErrorCode::VertexOutOfRange, "self loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const DynBitset& neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    long long num_edges() const {
        long long d = 0;
        for (int v = 0; v < n_; ++v) d += degree(v);
        return d / 2;
    }

    int min_degree() const {
        int best = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
        return best;
    }

    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != n_ - 1) return false;
        return true;
    }

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }
    const std::vector<std::string>& labels() const { return labels_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            raise(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }

private:
    int n_ = 0;
    std::vector<DynBitset> rows_;
    std::vector<std::string> labels_;
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

struct ComponentDecomposition {
    std::vector<std::vector<int>> components;  // each sorted; ordered by least vertex
    std::vector<bool> has_cycle;               // parallel to components
};

// Connected components, each flagged with whether it contains a cycle
// (a connected component has one exactly when its edge count reaches its
// vertex count).
inline ComponentDecomposition components(const Graph& g) {
    int n = g.num_vertices();
    ComponentDecomposition out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head) {
            const DynBitset& nb = g.neighbors(comp[head]);
            for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        long long edges = 0;
        for (int v : comp) edges += g.degree(v);
        edges /= 2;
        out.has_cycle.push_back(edges >= static_cast<long long>(comp.size()));
        out.components.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || components(g).components.size() == 1;
}

// Subgraph induced by `keep` (sorted, deduplicated internally); vertex i of
// the result is keep[i], labels carried over.
inline Graph induced_subgraph(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep) g.check_vertex(v);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(g.label(v));
    Graph out(static_cast<int>(keep.size()), std::move(labels));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline Graph delete_vertices(const Graph& g, const std::vector<int>& remove) {
    for (int v : remove) g.check_vertex(v);
    DynBitset gone(g.num_vertices());
    for (int v : remove) gone.set(v);
    std::vector<int> keep;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!gone.test(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// Join: disjoint union plus all edges between the two sides. Vertices of g1
// come first.
inline Graph graph_join(const Graph& g1, const Graph& g2) {
    int n1 = g1.num_vertices(), n2 = g2.num_vertices();
    std::vector<std::string> labels;
    labels.reserve(n1 + n2);
    for (int v = 0; v < n1; ++v) labels.push_back(g1.label(v));
    for (int v = 0; v < n2; ++v) labels.push_back(g2.label(v));
    Graph out(n1 + n2, std::move(labels));
    for (int u = 0; u < n1; ++u)
        for (int v = u + 1; v < n1; ++v)
            if (g1.adjacent(u, v)) out.add_edge(u, v);
    for (int u = 0; u < n2; ++u)
        for (int v = u + 1; v < n2; ++v)
            if (g2.adjacent(u, v)) out.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    return out;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& g : parts) n += g.num_vertices();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& g : parts)
        for (int v = 0; v < g.num_vertices(); ++v) labels.push_back(g.label(v));
    Graph out(n, std::move(labels));
    int base = 0;
    for (const auto& g : parts) {
        for (int u = 0; u < g.num_vertices(); ++u)
            for (int v = u + 1; v < g.num_vertices(); ++v)
                if (g.adjacent(u, v)) out.add_edge(base + u, base + v);
        base += g.num_vertices();
    }
    return out;
}

namespace detail {

// Iterated neighbor-color refinement; returns per-vertex color classes.
inline std::vector<int> refine_colors(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            const DynBitset& row = g.neighbors(v);
            for (int w = row.next(0); w >= 0; w = row.next(w + 1)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {color[v], std::move(nb)};
        }
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = next_ids.find(sig[v]);
            if (it == next_ids.end())
                it = next_ids.emplace(sig[v], static_cast<int>(next_ids.size())).first;
            next[v] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

inline bool iso_backtrack(const Graph& a, const Graph& b,
                          const std::vector<int>& ca, const std::vector<int>& cb,
                          std::vector<int>& map_ab, std::vector<char>& used, int v) {
    int n = a.num_vertices();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || ca[v] != cb[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.adjacent(u, v) != b.adjacent(map_ab[u], w)) ok = false;
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = 1;
        if (iso_backtrack(a, b, ca, cb, map_ab, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace detail

// Exact isomorphism for small graphs (<= 12 vertices): color refinement to
// prune, then backtracking search.
inline bool is_isomorphic_small(const Graph& a, const Graph& b) {
    constexpr int kMax = 12;
    if (a.num_vertices() > kMax || b.num_vertices() > kMax)
        raise(ErrorCode::TooLargeForExactIso,
              "isomorphism test limited to " + std::to_string(kMax) + " vertices");
    if (a.num_vertices() != b.num_vertices()) return false;
    if (a.num_edges() != b.num_edges()) return false;
    auto ca = detail::refine_colors(a);
    auto cb = detail::refine_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    std::vector<int> map_ab(a.num_vertices(), -1);
    std::vector<char> used(a.num_vertices(), 0);
    return detail::iso_backtrack(a, b, ca, cb, map_ab, used, 0);
}

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
inline std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> weight(n, 0), order;
    std::vector<char> visited(n, 0);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        order.push_back(best);
        const DynBitset& nb = g.neighbors(best);
        for (int w = nb.next(0); w >= 0; w = nb.next(w + 1))
            if (!visited[w]) ++weight[w];
    }
    std::reverse(order.begin(), order.end());  // elimination order
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Verify: for each v, its later neighbors must form a clique; it is
    // enough to check the earliest later neighbor against the rest.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int first = -1;
        const DynBitset& nb = g.neighbors(v);
        for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
            if (pos[w] <= i) continue;
            if (first < 0 || pos[w] < pos[first]) first = w;
        }
        if (first < 0) continue;
        for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
            if (pos[w] <= i || w == first) continue;
            if (!g.adjacent(first, w)) return std::nullopt;
        }
    }
    return order;
}

inline bool is_chordal(const Graph& g) {
    return perfect_elimination_ordering(g).has_value();
}

// DOT output: quoted labels, edges emitted in lexicographic (u, v) order.
inline void write_dot(const Graph& g, std::ostream& out,
                      const std::string& graph_name = "g") {
    out << "graph \"" << graph_name << "\" {\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (int u = 0; u < g.num_vertices(); ++u) {
        const DynBitset& nb = g.neighbors(u);
        for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1))
            out << "  " << u << " -- " << v << ";\n";
    }
    out << "}\n";
}

// Plain edge list, one "u v" per line with u < v, lexicographic order.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (int u = 0; u < g.num_vertices(); ++u) {
        const DynBitset& nb = g.neighbors(u);
        for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1))
            out << u << ' ' << v << "\n";
    }
}

}  // namespace pglab
