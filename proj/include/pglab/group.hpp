#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pglab/bitset.hpp"
#include "pglab/errors.hpp"

namespace pglab {

// A cyclic subgroup <x>, stored by sorted element indices. `generators` are
// the elements y with <y> = <x>; their count equals Euler phi of `order`.
struct CyclicSubgroup {
    std::vector<int> elements;    // sorted ascending
    std::vector<int> generators;  // sorted ascending
    int order = 0;
};

// d(M, N) = min(|M \ N|, |N \ M|). Both arguments must come from the same group.
inline int difference_d(const CyclicSubgroup& m, const CyclicSubgroup& n) {
    int only_m = 0, only_n = 0;
    size_t i = 0, j = 0;
    while (i < m.elements.size() && j < n.elements.size()) {
        if (m.elements[i] == n.elements[j]) { ++i; ++j; }
        else if (m.elements[i] < n.elements[j]) { ++only_m; ++i; }
        else { ++only_n; ++j; }
    }
    only_m += static_cast<int>(m.elements.size() - i);
    only_n += static_cast<int>(n.elements.size() - j);
    return std::min(only_m, only_n);
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Returns the prime p if n = p^k with k >= 1, otherwise nothing.
inline std::optional<int> prime_power_base(int n) {
    if (n < 2) return std::nullopt;
    int p = n;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = d; break; }
    }
    int m = n;
    while (m % p == 0) m /= p;
    if (m != 1) return std::nullopt;
    return p;
}

// Finite group presented by its Cayley table. The identity is always element 0
// (ingested tables are relabeled on construction). Element orders, the power
// closure of every element and the list of distinct cyclic subgroups are
// computed once and kept with the table; all queries after construction are
// read-only, so a FiniteGroup can be shared freely across threads.
class FiniteGroup {
public:
    // Validates an arbitrary table (Latin square, identity, associativity) and
    // normalizes the identity to index 0. This is the path for ingested data.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::string name) {
        validate_shape_and_latin(table);
        int e = find_identity(table);
        if (e < 0)
            raise(ErrorCode::NoIdentity, "table has no two-sided identity element");
        if (e != 0) relabel_identity_to_zero(table, e);
        check_associativity(table);
        return FiniteGroup(std::move(table), std::move(name));
    }

    // For family constructors whose tables are correct by construction: the
    // full associativity scan is skipped, cheap invariants are still checked.
    static FiniteGroup from_table_trusted(std::vector<std::vector<int>> table,
                                          std::string name) {
        validate_shape_and_latin(table);
        if (find_identity(table) != 0)
            raise(ErrorCode::NoIdentity, "trusted table must have identity at index 0");
        return FiniteGroup(std::move(table), std::move(name));
    }

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    int product(int a, int b) const { return table_[a][b]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_order_[a]; }

    // Membership mask of <x>.
    const DynBitset& power_closure(int x) const { return closure_[x]; }

    // Distinct cyclic subgroups, sorted by (order, elements lexicographically).
    const std::vector<CyclicSubgroup>& cyclic_subgroups() const { return subgroups_; }

    // Index into cyclic_subgroups() of <x>.
    int subgroup_index_of(int x) const { return subgroup_of_[x]; }

    const CyclicSubgroup& cyclic_subgroup(int x) const {
        return subgroups_[subgroup_of_[x]];
    }

    // Indices (into cyclic_subgroups) of the maximal members, in list order.
    const std::vector<int>& maximal_cyclic_indices() const { return maximal_; }

    std::vector<CyclicSubgroup> maximal_cyclic_subgroups() const {
        std::vector<CyclicSubgroup> out;
        out.reserve(maximal_.size());
        for (int i : maximal_) out.push_back(subgroups_[i]);
        return out;
    }

    // Max of d(M, N) over distinct maximal cyclic subgroups; 0 when there are
    // fewer than two (in particular for cyclic groups).
    int difference_number() const {
        int best = 0;
        for (size_t i = 0; i < maximal_.size(); ++i)
            for (size_t j = i + 1; j < maximal_.size(); ++j)
                best = std::max(best, difference_d(subgroups_[maximal_[i]],
                                                   subgroups_[maximal_[j]]));
        return best;
    }

    // Number of subgroups of prime order p, via the count of order-p elements.
    int count_subgroups_of_order_p(int p) const {
        if (!is_prime(p))
            raise(ErrorCode::PNotPrime, "p=" + std::to_string(p) + " is not prime");
        if (n_ % p != 0)
            raise(ErrorCode::PDoesNotDivideOrder,
                  "p=" + std::to_string(p) + " does not divide group order " +
                      std::to_string(n_));
        int cnt = 0;
        for (int x = 0; x < n_; ++x)
            if (element_order_[x] == p) ++cnt;
        return cnt / (p - 1);
    }

    // The prime p when |G| = p^k, k >= 1. The trivial group is not a p-group.
    std::optional<int> p_group_prime() const { return prime_power_base(n_); }

    bool is_cyclic() const {
        for (int x = 0; x < n_; ++x)
            if (element_order_[x] == n_) return true;
        return false;
    }

    // Structural test: 2-group of order >= 8, non-cyclic, with a unique
    // involution. Among 2-groups this pins down the generalized quaternions.
    bool is_generalized_quaternion() const {
        auto p = p_group_prime();
        if (!p || *p != 2 || n_ < 8 || is_cyclic()) return false;
        int involutions = 0;
        for (int x = 1; x < n_; ++x)
            if (element_order_[x] == 2) ++involutions;
        return involutions == 1;
    }

    // Smallest subgroup containing the given elements.
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const {
        DynBitset in(n_);
        std::vector<int> members{0};
        in.set(0);
        for (int g : gens)
            if (!in.test(g)) { in.set(g); members.push_back(g); }
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = 0; j < members.size(); ++j) {
                int prod = table_[members[i]][members[j]];
                if (!in.test(prod)) { in.set(prod); members.push_back(prod); }
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    bool has_maximal_cyclic_subgroup_of_order(int m) const {
        for (int i : maximal_)
            if (subgroups_[i].order == m) return true;
        return false;
    }

    // Whether some order-2 subgroup is maximal in the full subgroup lattice,
    // i.e. <x> with |x| = 2 and <x, g> = G for every g outside <x>.
    bool has_lattice_maximal_subgroup_of_order_2() const {
        for (int x = 1; x < n_; ++x) {
            if (element_order_[x] != 2) continue;
            bool maximal = true;
            for (int g = 1; g < n_ && maximal; ++g) {
                if (g == x) continue;
                if (static_cast<int>(subgroup_closure({x, g}).size()) != n_)
                    maximal = false;
            }
            if (maximal) return true;
        }
        return false;
    }

private:
    FiniteGroup(std::vector<std::vector<int>> table, std::string name)
        : n_(static_cast<int>(table.size())),
          table_(std::move(table)),
          name_(std::move(name)) {
        build_caches();
    }

    static void validate_shape_and_latin(const std::vector<std::vector<int>>& t) {
        int n = static_cast<int>(t.size());
        if (n == 0)
            raise(ErrorCode::NotLatinSquare, "table is empty");
        std::vector<char> seen(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(t[i].size()) != n)
                raise(ErrorCode::NotLatinSquare,
                      "row " + std::to_string(i) + " has wrong length");
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < n; ++j) {
                int v = t[i][j];
                if (v < 0 || v >= n || seen[v])
                    raise(ErrorCode::NotLatinSquare,
                          "row " + std::to_string(i) + " is not a permutation of 0.." +
                              std::to_string(n - 1));
                seen[v] = 1;
            }
        }
        for (int j = 0; j < n; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 0; i < n; ++i) {
                int v = t[i][j];
                if (seen[v])
                    raise(ErrorCode::NotLatinSquare,
                          "column " + std::to_string(j) + " is not a permutation of 0.." +
                              std::to_string(n - 1));
                seen[v] = 1;
            }
        }
    }

    static int find_identity(const std::vector<std::vector<int>>& t) {
        int n = static_cast<int>(t.size());
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                ok = t[e][i] == i && t[i][e] == i;
            if (ok) return e;
        }
        return -1;
    }

    static void relabel_identity_to_zero(std::vector<std::vector<int>>& t, int e) {
        int n = static_cast<int>(t.size());
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        perm[0] = e;
        perm[e] = 0;  // perm is its own inverse
        std::vector<std::vector<int>> out(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[perm[i]][perm[j]] = perm[t[i][j]];
        t = std::move(out);
    }

    static void check_associativity(const std::vector<std::vector<int>>& t) {
        int n = static_cast<int>(t.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (t[t[a][b]][c] != t[a][t[b][c]])
                        raise(ErrorCode::NotAssociative,
                              "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                                  " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }

    void build_caches() {
        inverse_.resize(n_);
        element_order_.resize(n_);
        closure_.assign(n_, DynBitset(n_));
        subgroup_of_.assign(n_, -1);

        for (int x = 0; x < n_; ++x) {
            for (int y = 0; y < n_; ++y)
                if (table_[x][y] == 0) { inverse_[x] = y; break; }
            int ord = 0, cur = 0;
            do {
                cur = table_[cur][x];
                closure_[x].set(cur);
                ++ord;
            } while (cur != 0);
            closure_[x].set(0);
            element_order_[x] = ord;
        }

        // Group elements by identical power closure: each distinct closure is
        // one cyclic subgroup, its generators are exactly the elements mapped
        // to it whose order equals the subgroup order.
        std::unordered_map<DynBitset, int, DynBitset::Hash> index_of;
        std::vector<CyclicSubgroup> subs;
        std::vector<std::vector<int>> membership;  // parallel: element -> subgroup
        std::vector<int> elem_to_sub(n_);
        for (int x = 0; x < n_; ++x) {
            auto it = index_of.find(closure_[x]);
            if (it == index_of.end()) {
                CyclicSubgroup s;
                s.elements = closure_[x].to_vector();
                s.order = static_cast<int>(s.elements.size());
                index_of.emplace(closure_[x], static_cast<int>(subs.size()));
                elem_to_sub[x] = static_cast<int>(subs.size());
                subs.push_back(std::move(s));
            } else {
                elem_to_sub[x] = it->second;
            }
        }
        for (int x = 0; x < n_; ++x) {
            CyclicSubgroup& s = subs[elem_to_sub[x]];
            if (element_order_[x] == s.order) s.generators.push_back(x);
        }

        // Deterministic ordering: by (order, elements lexicographically).
        std::vector<int> perm(subs.size());
        for (size_t i = 0; i < subs.size(); ++i) perm[i] = static_cast<int>(i);
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            if (subs[a].order != subs[b].order) return subs[a].order < subs[b].order;
            return subs[a].elements < subs[b].elements;
        });
        std::vector<int> rank(subs.size());
        for (size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);
        subgroups_.resize(subs.size());
        for (size_t i = 0; i < subs.size(); ++i)
            subgroups_[rank[i]] = std::move(subs[i]);
        for (int x = 0; x < n_; ++x) subgroup_of_[x] = rank[elem_to_sub[x]];

        for (size_t i = 0; i < subgroups_.size(); ++i) {
            bool contained = false;
            DynBitset mask = DynBitset::from_vector(n_, subgroups_[i].elements);
            for (size_t j = 0; j < subgroups_.size() && !contained; ++j) {
                if (i == j) continue;
                DynBitset other = DynBitset::from_vector(n_, subgroups_[j].elements);
                if (subgroups_[j].order > subgroups_[i].order && mask.is_subset_of(other))
                    contained = true;
            }
            if (!contained) maximal_.push_back(static_cast<int>(i));
        }
    }

    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::string name_;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    std::vector<DynBitset> closure_;
    std::vector<CyclicSubgroup> subgroups_;
    std::vector<int> subgroup_of_;
    std::vector<int> maximal_;
};

}  // namespace pglab
