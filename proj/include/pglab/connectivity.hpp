#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pglab/bitset.hpp"
#include "pglab/errors.hpp"
#include "pglab/graph.hpp"

namespace pglab {

// Size of a vertex cut, where "no cut exists" is a legitimate answer
// (complete graphs for plain connectivity, non-separable graphs for the
// cyclic variant).
class CutValue {
public:
    static CutValue finite(int v) { return CutValue(v); }
    static CutValue infinite() { return CutValue(-1); }

    bool is_infinite() const { return v_ < 0; }
    int value() const { return v_; }

    friend bool operator==(CutValue a, CutValue b) { return a.v_ == b.v_; }
    friend bool operator<(CutValue a, CutValue b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.v_ < b.v_;
    }

    std::string to_string() const {
        return is_infinite() ? "infinite" : std::to_string(v_);
    }

private:
    explicit CutValue(int v) : v_(v) {}
    int v_;
};

namespace detail {

constexpr int kFlowInf = std::numeric_limits<int>::max() / 4;

// Dinic's algorithm; paired edge storage so edge i and i^1 are mutual
// reverses.
class Dinic {
public:
    explicit Dinic(int n) : n_(n), head_(n, -1) {}

    void add_arc(int u, int v, int cap) {
        push(u, v, cap);
        push(v, u, 0);
    }

    // Undirected unit edge: both directions capacity 1 as mutual reverses.
    void add_undirected_unit(int u, int v) {
        push(u, v, 1);
        push(v, u, 1);
    }

    // Augments until no path remains or `limit` is reached.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter_ = head_;
            while (flow < limit) {
                int pushed = dfs(s, t, limit - flow);
                if (!pushed) break;
                flow += pushed;
            }
        }
        return flow;
    }

    // Residual reachability from s after max_flow.
    std::vector<char> reachable(int s) const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e >= 0; e = next_[e]) {
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
            }
        }
        return seen;
    }

private:
    void push(int u, int v, int cap) {
        to_.push_back(v);
        cap_.push_back(cap);
        next_.push_back(head_[u]);
        head_[u] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs(int s, int t) {
        level_.assign(n_, -1);
        level_[s] = 0;
        std::vector<int> q{s};
        for (size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            for (int e = head_[u]; e >= 0; e = next_[e])
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[u] + 1;
                    q.push_back(to_[e]);
                }
        }
        return level_[t] >= 0;
    }

    int dfs(int u, int t, int up) {
        if (u == t) return up;
        for (int& e = iter_[u]; e >= 0; e = next_[e]) {
            int v = to_[e];
            if (cap_[e] > 0 && level_[v] == level_[u] + 1) {
                int pushed = dfs(v, t, std::min(up, cap_[e]));
                if (pushed) {
                    cap_[e] -= pushed;
                    cap_[e ^ 1] += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    int n_;
    std::vector<int> head_, to_, cap_, next_, level_, iter_;
};

}  // namespace detail

struct VertexCutResult {
    CutValue value = CutValue::infinite();
    std::vector<int> cut;  // meaningful only when value is finite
};

// Minimum number of vertices outside A and B whose removal separates every
// A-vertex from every B-vertex. Infinite when an edge joins the sides.
// A and B must be nonempty and disjoint. `stop_at` caps the computed flow:
// when the result comes back >= stop_at the caller may not trust it as exact
// (used to prune searches that cannot improve a known bound).
inline VertexCutResult min_vertex_cut_between_sets(const Graph& g,
                                                   const std::vector<int>& a,
                                                   const std::vector<int>& b,
                                                   int stop_at = detail::kFlowInf) {
    int n = g.num_vertices();
    if (a.empty() || b.empty())
        raise(ErrorCode::SetsIntersect, "terminal sets must be nonempty");
    DynBitset in_a(n), in_b(n);
    for (int v : a) { g.check_vertex(v); in_a.set(v); }
    for (int v : b) { g.check_vertex(v); in_b.set(v); }
    if (in_a.intersects(in_b))
        raise(ErrorCode::SetsIntersect, "terminal sets overlap");

    for (int v : a)
        if (g.neighbors(v).intersects(in_b)) return {CutValue::infinite(), {}};

    // Split each free vertex into in/out halves; contract A into the source
    // and B into the sink.
    std::vector<int> id(n, -1);
    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (!in_a.test(v) && !in_b.test(v)) {
            id[v] = static_cast<int>(free_vertices.size());
            free_vertices.push_back(v);
        }
    int f = static_cast<int>(free_vertices.size());
    int source = 2 * f, sink = 2 * f + 1;
    detail::Dinic net(2 * f + 2);
    auto vin = [&](int v) { return 2 * id[v]; };
    auto vout = [&](int v) { return 2 * id[v] + 1; };
    for (int v : free_vertices) net.add_arc(vin(v), vout(v), 1);
    for (int u = 0; u < n; ++u) {
        const DynBitset& nb = g.neighbors(u);
        for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) {
            bool ua = in_a.test(u), ub = in_b.test(u);
            bool va = in_a.test(v), vb = in_b.test(v);
            if ((ua && va) || (ub && vb)) continue;
            if (ua) net.add_arc(source, vin(v), detail::kFlowInf);
            else if (va) net.add_arc(source, vin(u), detail::kFlowInf);
            else if (ub) net.add_arc(vout(v), sink, detail::kFlowInf);
            else if (vb) net.add_arc(vout(u), sink, detail::kFlowInf);
            else {
                net.add_arc(vout(u), vin(v), detail::kFlowInf);
                net.add_arc(vout(v), vin(u), detail::kFlowInf);
            }
        }
    }
    int limit = std::min(stop_at, f + 1);
    int flow = net.max_flow(source, sink, limit);
    VertexCutResult out;
    out.value = CutValue::finite(flow);
    if (flow < limit) {
        auto reach = net.reachable(source);
        for (int v : free_vertices)
            if (reach[vin(v)] && !reach[vout(v)]) out.cut.push_back(v);
    }
    return out;
}

struct KappaResult {
    int value = 0;
    // A minimum cutset when one exists; disconnected graphs carry the empty
    // set, complete and single-vertex graphs have none at all.
    std::optional<std::vector<int>> cutset;
};

// Vertex connectivity. Complete graphs take the n-1 convention (no cutset
// witness); otherwise the value is realized by the witness cutset. Candidate
// terminal pairs follow the classic scheme: a minimum-degree vertex v against
// its non-neighbors, plus non-adjacent pairs inside N(v); any minimum cut
// either avoids v (first family) or contains it (second).
inline KappaResult vertex_connectivity(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) raise(ErrorCode::EmptyGraph, "vertex connectivity needs >= 1 vertex");
    if (n == 1) return {0, std::nullopt};
    if (!is_connected(g)) return {0, std::vector<int>{}};
    if (g.is_complete()) return {n - 1, std::nullopt};

    int v = 0;
    for (int u = 1; u < n; ++u)
        if (g.degree(u) < g.degree(v)) v = u;

    int best = g.degree(v);
    std::vector<int> best_cut = g.neighbors(v).to_vector();

    auto try_pair = [&](int s, int t) {
        if (best == 0) return;
        VertexCutResult r = min_vertex_cut_between_sets(g, {s}, {t}, best);
        if (!r.value.is_infinite() && r.value.value() < best) {
            best = r.value.value();
            best_cut = r.cut;
        }
    };

    for (int w = 0; w < n; ++w)
        if (w != v && !g.adjacent(v, w)) try_pair(v, w);
    std::vector<int> nb = g.neighbors(v).to_vector();
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) try_pair(nb[i], nb[j]);

    std::sort(best_cut.begin(), best_cut.end());
    return {best, best_cut};
}

// Edge connectivity as min over flows from vertex 0 to every other vertex,
// undirected unit capacities. Any minimum edge cut separates 0 from some
// vertex, so the fixed source is exact.
inline int edge_connectivity(const Graph& g) {
    int n = g.num_vertices();
    if (n < 2) raise(ErrorCode::EmptyGraph, "edge connectivity needs >= 2 vertices");
    if (!is_connected(g)) return 0;
    int best = g.min_degree();
    for (int t = 1; t < n && best > 0; ++t) {
        detail::Dinic net(n);
        for (int u = 0; u < n; ++u) {
            const DynBitset& row = g.neighbors(u);
            for (int w = row.next(u + 1); w >= 0; w = row.next(w + 1))
                net.add_undirected_unit(u, w);
        }
        best = std::min(best, net.max_flow(0, t, best));
    }
    return best;
}

namespace detail {

// Classes of vertices with identical closed neighborhoods ("true twins").
// Class ids are assigned in vertex order, so the numbering is deterministic.
inline std::vector<int> closed_twin_classes(const Graph& g, int& num_classes) {
    int n = g.num_vertices();
    std::vector<int> cls(n, -1);
    std::unordered_map<DynBitset, int, DynBitset::Hash> ids;
    for (int v = 0; v < n; ++v) {
        DynBitset closed = g.neighbors(v);
        closed.set(v);
        auto it = ids.find(closed);
        if (it == ids.end()) it = ids.emplace(std::move(closed), static_cast<int>(ids.size())).first;
        cls[v] = it->second;
    }
    num_classes = static_cast<int>(ids.size());
    return cls;
}

struct CandidateCycles {
    std::vector<std::vector<int>> cycles;  // each sorted ascending
    std::vector<std::vector<int>> class_signature;  // sorted twin-class ids
    bool complete = false;  // true when every chordless cycle is represented
};

// Enumerates chordless cycles of length <= max_len, restricted to a
// twin-reduced universe: at most three vertices per closed-twin class.
//
// Why the reduction is exact for cut searches: a minimum separator (plain or
// cyclic) never contains part of a twin class whose other members it leaves
// behind, since the leftover twin re-attaches only to its own side. Minimum
// cutsets are therefore unions of whole twin classes, and any chordless cycle
// avoiding such a cutset can be re-rooted onto the three smallest members of
// its classes (a triangle uses at most three vertices of one class; longer
// chordless cycles cannot repeat a class because twins are always adjacent).
//
// `complete` is false when some chordless path hit max_len with extensions
// still open, i.e. longer chordless cycles may exist.
inline CandidateCycles candidate_cycles(const Graph& g, int max_len, bool chordal) {
    int n = g.num_vertices();
    CandidateCycles out;
    max_len = std::max(max_len, 3);

    int num_classes = 0;
    std::vector<int> cls = closed_twin_classes(g, num_classes);
    std::vector<int> kept_per_class(num_classes, 0);
    DynBitset universe(n);
    for (int v = 0; v < n; ++v)
        if (kept_per_class[cls[v]] < 3) {
            ++kept_per_class[cls[v]];
            universe.set(v);
        }

    bool truncated = false;
    std::vector<int> path;
    std::vector<char> in_path(n, 0);

    auto valid_extension = [&](int w, int p0) {
        if (!universe.test(w) || w <= p0 || in_path[w]) return false;
        // no chord against interior path vertices
        for (size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) return false;
        return true;
    };

    auto record = [&](int w) {
        std::vector<int> cyc = path;
        cyc.push_back(w);
        out.class_signature.emplace_back();
        auto& sig = out.class_signature.back();
        for (int v : cyc) sig.push_back(cls[v]);
        std::sort(sig.begin(), sig.end());
        std::sort(cyc.begin(), cyc.end());
        out.cycles.push_back(std::move(cyc));
    };

    auto dfs = [&](auto&& self) -> void {
        int p0 = path.front(), last = path.back();
        const DynBitset& nb = g.neighbors(last);
        for (int w = nb.next(p0 + 1); w >= 0; w = nb.next(w + 1)) {
            if (!valid_extension(w, p0)) continue;
            // With >= 2 path vertices, a neighbor of both ends closes a
            // chordless cycle (counted once, in the orientation with the
            // smaller second vertex). From a bare root every neighbor is
            // a first step, not a closure.
            if (path.size() >= 2 && g.adjacent(w, p0)) {
                if (w > path[1] && static_cast<int>(path.size()) + 1 <= max_len)
                    record(w);
                continue;
            }
            if (static_cast<int>(path.size()) + 1 >= max_len) {
                truncated = true;  // an extension exists we refuse to follow
                continue;
            }
            path.push_back(w);
            in_path[w] = 1;
            self(self);
            in_path[w] = 0;
            path.pop_back();
        }
    };

    for (int v = universe.next(0); v >= 0; v = universe.next(v + 1)) {
        path = {v};
        in_path[v] = 1;
        dfs(dfs);
        in_path[v] = 0;
    }
    // In a chordal graph the chordless cycles are exactly the triangles, all
    // of which fit under any bound.
    out.complete = chordal || !truncated;
    return out;
}

inline DynBitset closed_neighborhood(const Graph& g, const std::vector<int>& vs) {
    DynBitset nb(g.num_vertices());
    for (int v : vs) {
        nb |= g.neighbors(v);
        nb.set(v);
    }
    return nb;
}

// Any chordless cycle inside the induced subgraph on `allowed`, or empty.
// Finds a DFS back-edge cycle first, then shrinks across chords.
inline std::vector<int> find_chordless_cycle_within(const Graph& g,
                                                    const DynBitset& allowed) {
    int n = g.num_vertices();
    std::vector<int> parent(n, -2);
    std::vector<int> cycle;
    for (int s = allowed.next(0); s >= 0 && cycle.empty(); s = allowed.next(s + 1)) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty() && cycle.empty()) {
            int u = stack.back();
            stack.pop_back();
            const DynBitset& nb = g.neighbors(u);
            for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
                if (!allowed.test(w) || w == parent[u]) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                } else {
                    // back edge u-w: walk both ancestor chains up to the meet
                    std::vector<int> au, aw;
                    for (int x = u; x >= 0; x = parent[x]) au.push_back(x);
                    for (int x = w; x >= 0; x = parent[x]) aw.push_back(x);
                    std::reverse(au.begin(), au.end());
                    std::reverse(aw.begin(), aw.end());
                    size_t k = 0;
                    while (k + 1 < au.size() && k + 1 < aw.size() && au[k + 1] == aw[k + 1]) ++k;
                    cycle.assign(au.begin() + k, au.end());
                    std::reverse(cycle.begin(), cycle.end());
                    cycle.insert(cycle.end(), aw.begin() + k + 1, aw.end());
                    if (cycle.size() < 3) { cycle.clear(); continue; }
                    break;
                }
            }
        }
    }
    // shrink: replace the cycle by the shorter loop across any chord
    bool changed = true;
    while (changed && cycle.size() > 3) {
        changed = false;
        int len = static_cast<int>(cycle.size());
        for (int i = 0; i < len && !changed; ++i)
            for (int j = i + 2; j < len && !changed; ++j) {
                if (i == 0 && j == len - 1) continue;  // cycle edge, not chord
                if (g.adjacent(cycle[i], cycle[j])) {
                    cycle = std::vector<int>(cycle.begin() + i, cycle.begin() + j + 1);
                    changed = true;
                }
            }
    }
    std::sort(cycle.begin(), cycle.end());
    return cycle;
}

inline bool subgraph_has_cycle(const Graph& g, const DynBitset& allowed) {
    // per component of the induced subgraph: edges >= vertices means a cycle
    int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    for (int s = allowed.next(0); s >= 0; s = allowed.next(s + 1)) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        long long deg_sum = 0;
        for (size_t h = 0; h < comp.size(); ++h) {
            DynBitset nb = g.neighbors(comp[h]);
            nb &= allowed;
            deg_sum += nb.count();
            for (int w = nb.next(0); w >= 0; w = nb.next(w + 1))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        }
        if (deg_sum / 2 >= static_cast<long long>(comp.size())) return true;
    }
    return false;
}

}  // namespace detail

// True when deleting S leaves at least two components that contain cycles.
inline bool is_cyclic_vertex_cutset(const Graph& g, const std::vector<int>& s) {
    DynBitset removed(g.num_vertices());
    for (int v : s) {
        g.check_vertex(v);
        removed.set(v);
    }
    Graph h = delete_vertices(g, s);
    ComponentDecomposition cd = components(h);
    int cyclic = 0;
    for (bool c : cd.has_cycle)
        if (c) ++cyclic;
    return cyclic >= 2;
}

struct CyclicCutResult {
    CutValue value = CutValue::infinite();
    std::optional<std::vector<int>> cutset;  // present iff value is finite
};

// Exhaustive search over vertex subsets in (size, lexicographic) order;
// the default cap keeps the 2^|V| enumeration honest.
inline CyclicCutResult brute_force_ckappa(const Graph& g, int max_vertices = 16) {
    int n = g.num_vertices();
    if (n > max_vertices)
        raise(ErrorCode::InstanceTooLargeForExact,
              "subset search capped at " + std::to_string(max_vertices) + " vertices");
    if (n > 63)
        raise(ErrorCode::InstanceTooLargeForExact, "subset search capped at 63 vertices");

    std::vector<uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= uint64_t{1} << v;

    auto cyclic_components = [&](uint64_t removed) {
        uint64_t alive = ((n == 63 ? ~uint64_t{0} : (uint64_t{1} << n) - 1)) & ~removed;
        int cyclic = 0;
        uint64_t seen = 0;
        for (int s = 0; s < n; ++s) {
            uint64_t sbit = uint64_t{1} << s;
            if (!(alive & sbit) || (seen & sbit)) continue;
            uint64_t comp = sbit, frontier = sbit;
            long long deg_sum = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                uint64_t nb = adj[u] & alive;
                deg_sum += std::popcount(nb);
                uint64_t fresh = nb & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            if (deg_sum / 2 >= std::popcount(comp)) ++cyclic;
        }
        return cyclic;
    };

    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            uint64_t removed = 0;
            for (int i : idx) removed |= uint64_t{1} << i;
            if (cyclic_components(removed) >= 2)
                return {CutValue::finite(k), idx};
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {CutValue::infinite(), std::nullopt};
}

struct SeparabilityResult {
    bool separable = false;
    // two vertex-disjoint chordless cycles with no edge between them
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

struct SolverOptions {
    int brute_force_limit = 16;
    int cycle_bound = 6;
};

namespace detail {

// Shared scan: find a candidate cycle whose non-neighborhood still contains a
// cycle. Such a pair certifies separability (delete everything else).
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
find_separated_cycle_pair(const Graph& g, const CandidateCycles& cand) {
    int n = g.num_vertices();
    std::set<std::vector<uint64_t>> tried;  // dedupe by closed neighborhood
    DynBitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    for (const auto& cyc : cand.cycles) {
        DynBitset nb = closed_neighborhood(g, cyc);
        if (!tried.insert(nb.words()).second) continue;
        DynBitset rest = all;
        rest -= nb;
        if (!rest.any()) continue;
        if (subgraph_has_cycle(g, rest)) {
            std::vector<int> other = find_chordless_cycle_within(g, rest);
            return std::make_pair(cyc, other);
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Whether the graph contains two vertex-disjoint cycles with no edge between
// them (equivalently: some vertex deletion leaves two cycle-bearing
// components). Resolution ladder: bounded chordless-cycle candidates, then
// subset search on small graphs, then unbounded enumeration.
inline SeparabilityResult cyclically_separable(const Graph& g,
                                               const SolverOptions& opts = {}) {
    int n = g.num_vertices();
    if (n == 0) return {false, std::nullopt};
    bool chordal = is_chordal(g);
    detail::CandidateCycles cand = detail::candidate_cycles(g, opts.cycle_bound, chordal);
    auto pair = detail::find_separated_cycle_pair(g, cand);
    if (pair) return {true, pair};
    if (cand.complete) return {false, std::nullopt};

    if (n <= opts.brute_force_limit) {
        CyclicCutResult bf = brute_force_ckappa(g, opts.brute_force_limit);
        if (bf.value.is_infinite()) return {false, std::nullopt};
        // rebuild an explicit cycle pair from the cutset's leftover components
        Graph h = delete_vertices(g, *bf.cutset);
        DynBitset removed(n);
        for (int v : *bf.cutset) removed.set(v);
        std::vector<int> survivors;
        for (int v = 0; v < n; ++v)
            if (!removed.test(v)) survivors.push_back(v);
        ComponentDecomposition cd = components(h);
        std::vector<std::vector<int>> cycles;
        for (size_t c = 0; c < cd.components.size() && cycles.size() < 2; ++c) {
            if (!cd.has_cycle[c]) continue;
            DynBitset allowed(n);
            for (int local : cd.components[c]) allowed.set(survivors[local]);
            cycles.push_back(detail::find_chordless_cycle_within(g, allowed));
        }
        return {true, std::make_pair(cycles[0], cycles[1])};
    }

    detail::CandidateCycles full = detail::candidate_cycles(g, n, chordal);
    pair = detail::find_separated_cycle_pair(g, full);
    if (pair) return {true, pair};
    return {false, std::nullopt};
}

// Minimum size of a vertex set whose deletion leaves >= 2 components that
// contain cycles; Infinite when no such set exists. Every minimum cyclic
// cutset is a minimum separator between a chordless cycle on one side and one
// on the other, so the search ranges over candidate cycle pairs that are
// disjoint and non-adjacent, deduplicated by twin-class signature. The value
// of kappa is a floor, which both prunes the scan and rescues truncated
// candidate sets when the floor is already attained.
inline CyclicCutResult cyclic_vertex_connectivity(const Graph& g,
                                                  const SolverOptions& opts = {}) {
    int n = g.num_vertices();
    if (n == 0) raise(ErrorCode::EmptyGraph, "cyclic vertex connectivity needs >= 1 vertex");

    {
        ComponentDecomposition cd = components(g);
        int cyclic = 0;
        for (bool c : cd.has_cycle)
            if (c) ++cyclic;
        if (cyclic >= 2) return {CutValue::finite(0), std::vector<int>{}};
    }

    int kappa_floor = vertex_connectivity(g).value;
    bool chordal = is_chordal(g);
    detail::CandidateCycles cand = detail::candidate_cycles(g, opts.cycle_bound, chordal);

    // candidates that can possibly face another cycle across a cut
    std::vector<int> live;
    {
        DynBitset all(n);
        for (int v = 0; v < n; ++v) all.set(v);
        for (size_t i = 0; i < cand.cycles.size(); ++i) {
            DynBitset rest = all;
            rest -= detail::closed_neighborhood(g, cand.cycles[i]);
            if (rest.any() && detail::subgraph_has_cycle(g, rest))
                live.push_back(static_cast<int>(i));
        }
    }

    CutValue best = CutValue::infinite();
    std::vector<int> best_cut;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    bool done = false;
    for (size_t ii = 0; ii < live.size() && !done; ++ii) {
        const auto& c1 = cand.cycles[live[ii]];
        DynBitset nb1 = detail::closed_neighborhood(g, c1);
        for (size_t jj = ii + 1; jj < live.size() && !done; ++jj) {
            const auto& c2 = cand.cycles[live[jj]];
            bool disjoint_ok = true;
            for (int v : c2)
                if (nb1.test(v)) { disjoint_ok = false; break; }
            if (!disjoint_ok) continue;  // overlapping or adjacent cycles
            auto key = std::minmax(cand.class_signature[live[ii]],
                                   cand.class_signature[live[jj]]);
            if (!seen.insert(key).second) continue;
            int stop = best.is_infinite() ? n : best.value();
            VertexCutResult r = min_vertex_cut_between_sets(g, c1, c2, stop);
            if (r.value.is_infinite() || r.value.value() >= stop) continue;
            best = r.value;
            best_cut = r.cut;
            if (best.value() <= kappa_floor) done = true;
        }
    }

    bool exact = cand.complete || done ||
                 (!best.is_infinite() && best.value() <= kappa_floor);
    if (exact) {
        if (best.is_infinite()) return {best, std::nullopt};
        std::sort(best_cut.begin(), best_cut.end());
        return {best, best_cut};
    }
    if (n <= opts.brute_force_limit) return brute_force_ckappa(g, opts.brute_force_limit);
    raise(ErrorCode::InstanceTooLargeForExact,
          "chordless cycle bound " + std::to_string(opts.cycle_bound) +
              " exceeded on a non-chordal graph with " + std::to_string(n) +
              " vertices (> brute force limit " + std::to_string(opts.brute_force_limit) + ")");
}

struct ConnectivityReport {
    int kappa = 0;
    std::optional<std::vector<int>> kappa_cutset;  // absent for complete/trivial
    int min_degree = 0;
    std::optional<int> edge_connectivity;  // absent for single-vertex graphs
    bool separable = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> separability_witness;
    CutValue ckappa = CutValue::infinite();
    std::optional<std::vector<int>> ckappa_cutset;
};

// Re-validates every witness in a report against first principles (vertex
// deletion plus component analysis only). Returns a description of the first
// broken witness, or nothing when all check out.
inline std::optional<std::string> verify_report_witnesses(
    const Graph& g, const struct ConnectivityReport& rep);

inline ConnectivityReport connectivity_report(const Graph& g,
                                              const SolverOptions& opts = {}) {
    ConnectivityReport rep;
    KappaResult k = vertex_connectivity(g);
    rep.kappa = k.value;
    rep.kappa_cutset = std::move(k.cutset);
    rep.min_degree = g.min_degree();
    if (g.num_vertices() >= 2) rep.edge_connectivity = edge_connectivity(g);
    SeparabilityResult sep = cyclically_separable(g, opts);
    rep.separable = sep.separable;
    rep.separability_witness = std::move(sep.witness);
    CyclicCutResult ck = cyclic_vertex_connectivity(g, opts);
    rep.ckappa = ck.value;
    rep.ckappa_cutset = std::move(ck.cutset);
    return rep;
}

inline std::optional<std::string> verify_report_witnesses(
    const Graph& g, const ConnectivityReport& rep) {
    int n = g.num_vertices();

    if (rep.kappa_cutset) {
        const auto& cut = *rep.kappa_cutset;
        if (static_cast<int>(cut.size()) != rep.kappa)
            return "kappa cutset size " + std::to_string(cut.size()) +
                   " != kappa " + std::to_string(rep.kappa);
        Graph h = delete_vertices(g, cut);
        if (h.num_vertices() > 1 && is_connected(h))
            return "kappa cutset does not disconnect";
    } else if (n > 1 && !g.is_complete()) {
        return "missing kappa cutset on a non-complete graph";
    }

    if (rep.separable != !rep.ckappa.is_infinite())
        return "separability flag inconsistent with ckappa finiteness";
    if (rep.separable != rep.separability_witness.has_value())
        return "separability flag inconsistent with cycle-pair witness";

    if (rep.separability_witness) {
        const auto& [c1, c2] = *rep.separability_witness;
        DynBitset s1 = DynBitset::from_vector(n, c1);
        DynBitset s2 = DynBitset::from_vector(n, c2);
        if (s1.intersects(s2)) return "witness cycles overlap";
        for (int u : c1)
            if (g.neighbors(u).intersects(s2)) return "witness cycles are adjacent";
        if (!detail::subgraph_has_cycle(g, s1) || !detail::subgraph_has_cycle(g, s2))
            return "witness set does not span a cycle";
    }

    if (!rep.ckappa.is_infinite()) {
        if (!rep.ckappa_cutset) return "finite ckappa without a cutset";
        if (static_cast<int>(rep.ckappa_cutset->size()) != rep.ckappa.value())
            return "ckappa cutset size mismatch";
        if (!is_cyclic_vertex_cutset(g, *rep.ckappa_cutset))
            return "ckappa cutset leaves fewer than two cyclic components";
        if (rep.ckappa.value() < rep.kappa)
            return "ckappa below kappa";
    } else if (rep.ckappa_cutset) {
        return "infinite ckappa carries a cutset";
    }
    return std::nullopt;
}

}  // namespace pglab
