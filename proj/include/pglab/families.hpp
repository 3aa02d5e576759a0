#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pglab/errors.hpp"
#include "pglab/group.hpp"

namespace pglab {

// Parameterized construction recipe for a group. Direct products nest
// arbitrary specs; every other kind takes one or two integer parameters.
struct FamilySpec {
    enum class Kind {
        Cyclic,            // cyclic(n), n >= 1
        DirectProduct,     // product of the factor specs
        Dihedral,          // dihedral(n): order 2n, n >= 1
        Dicyclic,          // dicyclic(n): order 4n, n >= 2
        Semidihedral,      // semidihedral(k): order 2^k, k >= 4
        ModularMaximalCyclic,  // modular(p, k): order p^k, k >= 3
        Heisenberg,        // heisenberg(p): order p^3, p prime
    };

    Kind kind = Kind::Cyclic;
    int a = 0;
    int b = 0;
    std::vector<FamilySpec> factors;

    static FamilySpec cyclic(int n) { return {Kind::Cyclic, n, 0, {}}; }
    static FamilySpec dihedral(int n) { return {Kind::Dihedral, n, 0, {}}; }
    static FamilySpec dicyclic(int n) { return {Kind::Dicyclic, n, 0, {}}; }
    static FamilySpec semidihedral(int k) { return {Kind::Semidihedral, k, 0, {}}; }
    static FamilySpec modular(int p, int k) { return {Kind::ModularMaximalCyclic, p, k, {}}; }
    static FamilySpec heisenberg(int p) { return {Kind::Heisenberg, p, 0, {}}; }
    static FamilySpec product(std::vector<FamilySpec> fs) {
        FamilySpec s;
        s.kind = Kind::DirectProduct;
        s.factors = std::move(fs);
        return s;
    }

    std::string name() const;
    int order() const;
};

namespace detail {

inline int ipow(int base, int exp) {
    int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// Elements a^i for i < n, then a^i b at index n + i. Relation b a = a^-1 b.
inline std::vector<std::vector<int>> dihedral_table(int n) {
    int order = 2 * n;
    auto idx = [n](int i, int flip) { return flip ? n + i : i; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            t[idx(i, 0)][idx(j, 0)] = idx((i + j) % n, 0);
            t[idx(i, 0)][idx(j, 1)] = idx((i + j) % n, 1);
            t[idx(i, 1)][idx(j, 0)] = idx(((i - j) % n + n) % n, 1);
            t[idx(i, 1)][idx(j, 1)] = idx(((i - j) % n + n) % n, 0);
        }
    }
    return t;
}

// Elements a^i for i < 2n, then a^i b. Relations b^2 = a^n, b a = a^-1 b.
inline std::vector<std::vector<int>> dicyclic_table(int n) {
    int m = 2 * n;
    int order = 4 * n;
    auto idx = [m](int i, int flip) { return flip ? m + i : i; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            t[idx(i, 0)][idx(j, 0)] = idx((i + j) % m, 0);
            t[idx(i, 0)][idx(j, 1)] = idx((i + j) % m, 1);
            t[idx(i, 1)][idx(j, 0)] = idx(((i - j) % m + m) % m, 1);
            t[idx(i, 1)][idx(j, 1)] = idx(((i - j + n) % m + m) % m, 0);
        }
    }
    return t;
}

// Common shape of semidihedral and modular maximal-cyclic groups: <a> of
// order m acted on by b of order r via a -> a^t. Elements a^i b^j.
inline std::vector<std::vector<int>> metacyclic_table(int m, int r, int t) {
    int order = m * r;
    auto idx = [r](int i, int j) { return i * r + j; };
    std::vector<int> tpow(r);  // t^j mod m
    tpow[0] = 1;
    for (int j = 1; j < r; ++j) tpow[j] = static_cast<int>((static_cast<long long>(tpow[j - 1]) * t) % m);
    std::vector<std::vector<int>> out(order, std::vector<int>(order));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < r; ++j)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < r; ++j2) {
                    int lhs = idx(i, j), rhs = idx(i2, j2);
                    int ai = static_cast<int>((i + static_cast<long long>(i2) * tpow[j]) % m);
                    out[lhs][rhs] = idx(ai, (j + j2) % r);
                }
    return out;
}

// Upper unitriangular 3x3 matrices over F_p, coordinates (a, b, c).
inline std::vector<std::vector<int>> heisenberg_table(int p) {
    int order = p * p * p;
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            t[idx(a, b, c)][idx(a2, b2, c2)] =
                                idx((a + a2) % p, (b + b2) % p,
                                    (c + c2 + a * b2) % p);
    return t;
}

}  // namespace detail

inline int FamilySpec::order() const {
    switch (kind) {
        case Kind::Cyclic: return a;
        case Kind::Dihedral: return 2 * a;
        case Kind::Dicyclic: return 4 * a;
        case Kind::Semidihedral: return detail::ipow(2, a);
        case Kind::ModularMaximalCyclic: return detail::ipow(a, b);
        case Kind::Heisenberg: return a * a * a;
        case Kind::DirectProduct: {
            int n = 1;
            for (const auto& f : factors) n *= f.order();
            return n;
        }
    }
    return 0;
}

inline std::string FamilySpec::name() const {
    switch (kind) {
        case Kind::Cyclic: return "Z" + std::to_string(a);
        case Kind::Dihedral: return "D" + std::to_string(2 * a);
        case Kind::Dicyclic: {
            int n = 4 * a;
            // generalized quaternion naming for 2-power orders
            if ((n & (n - 1)) == 0) return "Q" + std::to_string(n);
            return "Dic" + std::to_string(n);
        }
        case Kind::Semidihedral: return "SD" + std::to_string(detail::ipow(2, a));
        case Kind::ModularMaximalCyclic: return "M" + std::to_string(detail::ipow(a, b));
        case Kind::Heisenberg: return "He" + std::to_string(a * a * a);
        case Kind::DirectProduct: {
            std::string s;
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) s += "x";
                s += factors[i].name();
            }
            return s;
        }
    }
    return "?";
}

inline FiniteGroup build_group(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    switch (spec.kind) {
        case Kind::Cyclic:
            if (spec.a < 1)
                raise(ErrorCode::BadParameter, "cyclic requires n >= 1, got " + std::to_string(spec.a));
            return FiniteGroup::from_table_trusted(detail::cyclic_table(spec.a), spec.name());
        case Kind::Dihedral:
            if (spec.a < 1)
                raise(ErrorCode::BadParameter, "dihedral requires n >= 1, got " + std::to_string(spec.a));
            return FiniteGroup::from_table_trusted(detail::dihedral_table(spec.a), spec.name());
        case Kind::Dicyclic:
            if (spec.a < 2)
                raise(ErrorCode::BadParameter, "dicyclic requires n >= 2, got " + std::to_string(spec.a));
            return FiniteGroup::from_table_trusted(detail::dicyclic_table(spec.a), spec.name());
        case Kind::Semidihedral: {
            if (spec.a < 4)
                raise(ErrorCode::BadParameter, "semidihedral requires k >= 4, got " + std::to_string(spec.a));
            int m = detail::ipow(2, spec.a - 1);
            return FiniteGroup::from_table_trusted(
                detail::metacyclic_table(m, 2, m / 2 - 1), spec.name());
        }
        case Kind::ModularMaximalCyclic: {
            if (!is_prime(spec.a))
                raise(ErrorCode::BadParameter, "modular requires prime p, got " + std::to_string(spec.a));
            if (spec.b < 3)
                raise(ErrorCode::BadParameter, "modular requires k >= 3, got " + std::to_string(spec.b));
            int m = detail::ipow(spec.a, spec.b - 1);
            return FiniteGroup::from_table_trusted(
                detail::metacyclic_table(m, spec.a, m / spec.a + 1), spec.name());
        }
        case Kind::Heisenberg:
            if (!is_prime(spec.a))
                raise(ErrorCode::BadParameter, "heisenberg requires prime p, got " + std::to_string(spec.a));
            return FiniteGroup::from_table_trusted(detail::heisenberg_table(spec.a), spec.name());
        case Kind::DirectProduct: {
            if (spec.factors.empty())
                raise(ErrorCode::BadParameter, "direct product needs at least one factor");
            std::vector<FiniteGroup> gs;
            gs.reserve(spec.factors.size());
            for (const auto& f : spec.factors) gs.push_back(build_group(f));
            int n = 1;
            for (const auto& g : gs) n *= g.order();
            // mixed-radix index, first factor most significant
            auto decode = [&](int x, std::vector<int>& coords) {
                for (size_t k = gs.size(); k-- > 0;) {
                    coords[k] = x % gs[k].order();
                    x /= gs[k].order();
                }
            };
            std::vector<std::vector<int>> t(n, std::vector<int>(n));
            std::vector<int> ca(gs.size()), cb(gs.size());
            for (int x = 0; x < n; ++x) {
                decode(x, ca);
                for (int y = 0; y < n; ++y) {
                    decode(y, cb);
                    int out = 0;
                    for (size_t k = 0; k < gs.size(); ++k)
                        out = out * gs[k].order() + gs[k].product(ca[k], cb[k]);
                    t[x][y] = out;
                }
            }
            return FiniteGroup::from_table_trusted(std::move(t), spec.name());
        }
    }
    raise(ErrorCode::BadParameter, "unknown family kind");
}

struct CatalogEntry {
    FamilySpec spec;
    std::string name;
    int order = 0;
    std::optional<int> p;            // set for the p-group section
    std::vector<std::string> tags;   // e.g. "example:paper"
};

namespace detail {

// Partitions of k in descending lexicographic order, parts descending.
inline std::vector<std::vector<int>> partitions(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

}  // namespace detail

// Deterministic p-group catalog. For each prime bound p -> N: all abelian
// p-groups of order p^k <= N (one per partition of k); for p = 2 the
// dihedral, dicyclic, semidihedral and modular groups of 2-power order up to
// the bound; for odd p the modular and Heisenberg groups of order p^3.
// Two fixed non-p-group rows (Z6, D40) are always appended as reference
// examples. Entries are sorted by (order, name) and duplicate-free.
inline std::vector<CatalogEntry> catalog(const std::map<int, int>& max_order) {
    std::vector<CatalogEntry> out;
    auto add = [&out](FamilySpec spec, std::optional<int> p,
                      std::vector<std::string> tags = {}) {
        CatalogEntry e;
        e.name = spec.name();
        e.order = spec.order();
        e.spec = std::move(spec);
        e.p = p;
        e.tags = std::move(tags);
        out.push_back(std::move(e));
    };

    for (const auto& [p, bound] : max_order) {
        if (!is_prime(p))
            raise(ErrorCode::BadParameter, "catalog bound key " + std::to_string(p) + " is not prime");
        for (int k = 1, pk = p; pk <= bound; ++k, pk *= p) {
            for (const auto& part : detail::partitions(k)) {
                if (part.size() == 1) {
                    add(FamilySpec::cyclic(pk), p);
                } else {
                    std::vector<FamilySpec> fs;
                    for (int lam : part) fs.push_back(FamilySpec::cyclic(detail::ipow(p, lam)));
                    add(FamilySpec::product(std::move(fs)), p);
                }
            }
            if (p == 2 && k >= 3) {
                add(FamilySpec::dihedral(pk / 2), p);
                add(FamilySpec::dicyclic(pk / 4), p);
                if (k >= 4) {
                    add(FamilySpec::semidihedral(k), p);
                    add(FamilySpec::modular(2, k), p);
                }
            }
            if (p != 2 && k == 3) {
                add(FamilySpec::modular(p, 3), p);
                add(FamilySpec::heisenberg(p), p);
            }
        }
    }

    add(FamilySpec::cyclic(6), std::nullopt, {"example:paper"});
    add(FamilySpec::dihedral(20), std::nullopt, {"example:paper"});

    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.name < b.name;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CatalogEntry& a, const CatalogEntry& b) {
                              return a.name == b.name;
                          }),
              out.end());
    return out;
}

}  // namespace pglab
