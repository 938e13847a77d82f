#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfcat/hopf.hpp"

namespace hopfcat {

/// A finite group by its Cayley table. The group law (associativity,
/// identity, inverses) is verified on construction.
class GroupTable {
public:
    GroupTable(size_t order, std::vector<std::vector<size_t>> table, size_t identity,
               std::string name = "")
        : order_(order), table_(std::move(table)), identity_(identity), name_(std::move(name)) {
        if (order_ == 0) throw SchemaError("group order must be positive");
        if (table_.size() != order_) throw SchemaError("Cayley table has wrong row count");
        for (const auto& row : table_) {
            if (row.size() != order_) throw SchemaError("Cayley table has wrong column count");
            for (size_t v : row)
                if (v >= order_) throw SchemaError("Cayley table entry out of range");
        }
        if (identity_ >= order_) throw SchemaError("identity index out of range");
        verify_group_law();
        inverses_.resize(order_);
        for (size_t i = 0; i < order_; ++i)
            for (size_t j = 0; j < order_; ++j)
                if (table_[i][j] == identity_) inverses_[i] = j;
    }

    size_t order() const { return order_; }
    size_t identity() const { return identity_; }
    size_t mul(size_t i, size_t j) const { return table_[i][j]; }
    size_t inverse(size_t i) const { return inverses_[i]; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<size_t>>& table() const { return table_; }

    bool is_abelian() const {
        for (size_t i = 0; i < order_; ++i)
            for (size_t j = i + 1; j < order_; ++j)
                if (table_[i][j] != table_[j][i]) return false;
        return true;
    }

    size_t element_order(size_t g) const {
        size_t k = 1, x = g;
        while (x != identity_) {
            x = mul(x, g);
            ++k;
        }
        return k;
    }

private:
    void verify_group_law() const {
        for (size_t i = 0; i < order_; ++i)
            if (table_[identity_][i] != i || table_[i][identity_] != i)
                throw PreconditionError("table identity row/column is wrong");
        for (size_t i = 0; i < order_; ++i) {
            bool has_inverse = false;
            for (size_t j = 0; j < order_ && !has_inverse; ++j)
                has_inverse = table_[i][j] == identity_ && table_[j][i] == identity_;
            if (!has_inverse) throw PreconditionError("table element has no inverse");
        }
        for (size_t i = 0; i < order_; ++i)
            for (size_t j = 0; j < order_; ++j)
                for (size_t k = 0; k < order_; ++k)
                    if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                        throw PreconditionError("table is not associative");
    }

    size_t order_;
    std::vector<std::vector<size_t>> table_;
    size_t identity_;
    std::string name_;
    std::vector<size_t> inverses_;
};

inline GroupTable cyclic_group(size_t n, std::string name = "") {
    if (name.empty()) name = "c" + std::to_string(n);
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return GroupTable(n, std::move(t), 0, std::move(name));
}

/// Dihedral group of order 2n. Index encoding: (eps, a) -> eps*n + a for the
/// element s^eps r^a, with s r^a s = r^{-a}.
inline GroupTable dihedral_group(size_t n, std::string name = "") {
    if (name.empty()) name = "d" + std::to_string(n);
    const size_t order = 2 * n;
    std::vector<std::vector<size_t>> t(order, std::vector<size_t>(order));
    for (size_t e1 = 0; e1 < 2; ++e1)
        for (size_t a = 0; a < n; ++a)
            for (size_t e2 = 0; e2 < 2; ++e2)
                for (size_t b = 0; b < n; ++b) {
                    const size_t eps = e1 ^ e2;
                    const size_t rot = e2 ? (b + n - a % n) % n : (a + b) % n;
                    t[e1 * n + a][e2 * n + b] = eps * n + rot;
                }
    return GroupTable(order, std::move(t), 0, std::move(name));
}

/// The symmetric group on three letters, realized as the triangle's
/// dihedral group: indices 0..2 are even, 3..5 odd.
inline GroupTable symmetric3() { return dihedral_group(3, "s3"); }

/// Quaternion group {1,-1,i,-i,j,-j,k,-k}; index 2u+s encodes unit u in
/// (1,i,j,k) with sign s.
inline GroupTable quaternion_group() {
    // unit multiplication table and sign twists for 1,i,j,k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<size_t>> t(8, std::vector<size_t>(8));
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j) {
            const size_t ui = i / 2, uj = j / 2;
            const int si = i % 2 ? -1 : 1, sj = j % 2 ? -1 : 1;
            const int s = si * sj * sign[ui][uj];
            t[i][j] = 2 * (size_t)unit[ui][uj] + (s < 0 ? 1 : 0);
        }
    return GroupTable(8, std::move(t), 0, "q8");
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::string name = "") {
    if (name.empty()) name = a.name() + "x" + b.name();
    const size_t n = a.order() * b.order();
    std::vector<std::vector<size_t>> t(n, std::vector<size_t>(n));
    for (size_t i1 = 0; i1 < a.order(); ++i1)
        for (size_t j1 = 0; j1 < b.order(); ++j1)
            for (size_t i2 = 0; i2 < a.order(); ++i2)
                for (size_t j2 = 0; j2 < b.order(); ++j2)
                    t[i1 * b.order() + j1][i2 * b.order() + j2] =
                        a.mul(i1, i2) * b.order() + b.mul(j1, j2);
    return GroupTable(n, std::move(t), a.identity() * b.order() + b.identity(), std::move(name));
}

/// Closure of a subset under multiplication and inverses.
inline std::vector<size_t> subgroup_closure(const GroupTable& g, std::vector<size_t> gens) {
    std::set<size_t> members(gens.begin(), gens.end());
    members.insert(g.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<size_t> snapshot(members.begin(), members.end());
        for (size_t x : snapshot) {
            if (members.insert(g.inverse(x)).second) grew = true;
            for (size_t y : snapshot)
                if (members.insert(g.mul(x, y)).second) grew = true;
        }
    }
    return {members.begin(), members.end()};
}

/// All subgroups, as sorted element lists ordered by (size, elements).
/// Exhaustive for groups of order <= 8, where three generators suffice.
inline std::vector<std::vector<size_t>> subgroups(const GroupTable& g) {
    std::set<std::vector<size_t>> found;
    found.insert({g.identity()});
    const size_t n = g.order();
    for (size_t a = 0; a < n; ++a) {
        found.insert(subgroup_closure(g, {a}));
        for (size_t b = a + 1; b < n; ++b) {
            found.insert(subgroup_closure(g, {a, b}));
            for (size_t c = b + 1; c < n; ++c) found.insert(subgroup_closure(g, {a, b, c}));
        }
    }
    std::vector<std::vector<size_t>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

inline bool is_normal_subgroup(const GroupTable& g, const std::vector<size_t>& elements) {
    const std::set<size_t> members(elements.begin(), elements.end());
    for (size_t x = 0; x < g.order(); ++x)
        for (size_t h : elements)
            if (!members.count(g.mul(g.mul(x, h), g.inverse(x)))) return false;
    return true;
}

/// The subgroup as a group in its own right; elements keep the order of the
/// given (sorted) list.
inline GroupTable subgroup_table(const GroupTable& g, const std::vector<size_t>& elements,
                                 std::string name = "") {
    const size_t m = elements.size();
    std::vector<size_t> position(g.order(), g.order());
    for (size_t i = 0; i < m; ++i) position[elements[i]] = i;
    std::vector<std::vector<size_t>> t(m, std::vector<size_t>(m));
    size_t identity = 0;
    for (size_t i = 0; i < m; ++i) {
        if (elements[i] == g.identity()) identity = i;
        for (size_t j = 0; j < m; ++j) {
            const size_t p = g.mul(elements[i], elements[j]);
            if (position[p] == g.order()) throw PreconditionError("element list is not a subgroup");
            t[i][j] = position[p];
        }
    }
    return GroupTable(m, std::move(t), identity, std::move(name));
}

/// Quotient by a normal subgroup. coset_of maps a group element to its
/// coset index; cosets are numbered by their least representative.
struct QuotientGroup {
    GroupTable table;
    std::vector<size_t> coset_of;
};

inline QuotientGroup quotient_group(const GroupTable& g, const std::vector<size_t>& normal,
                                    std::string name = "") {
    if (!is_normal_subgroup(g, normal)) throw PreconditionError("quotient by non-normal subgroup");
    const size_t n = g.order();
    std::vector<size_t> coset_of(n, n);
    std::vector<size_t> reps;
    for (size_t x = 0; x < n; ++x) {
        if (coset_of[x] != n) continue;
        const size_t index = reps.size();
        reps.push_back(x);
        for (size_t h : normal) coset_of[g.mul(x, h)] = index;
    }
    const size_t q = reps.size();
    std::vector<std::vector<size_t>> t(q, std::vector<size_t>(q));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j) t[i][j] = coset_of[g.mul(reps[i], reps[j])];
    return {GroupTable(q, std::move(t), coset_of[g.identity()], std::move(name)),
            std::move(coset_of)};
}

/// Backtracking isomorphism search; returns an index map a -> b or nullopt.
/// Intended for the desk-scale orders used here.
inline std::optional<std::vector<size_t>> find_group_isomorphism(const GroupTable& a,
                                                                 const GroupTable& b) {
    if (a.order() != b.order()) return std::nullopt;
    const size_t n = a.order();
    std::vector<size_t> image(n, n);
    std::vector<bool> used(n, false);
    image[a.identity()] = b.identity();
    used[b.identity()] = true;

    auto consistent = [&](size_t x) {
        for (size_t y = 0; y < n; ++y) {
            if (image[y] == n) continue;
            if (image[a.mul(x, y)] != n && image[a.mul(x, y)] != b.mul(image[x], image[y]))
                return false;
            if (image[a.mul(y, x)] != n && image[a.mul(y, x)] != b.mul(image[y], image[x]))
                return false;
        }
        return true;
    };

    std::vector<size_t> order_a(n);
    std::iota(order_a.begin(), order_a.end(), 0);

    std::function<bool(size_t)> extend = [&](size_t pos) -> bool {
        while (pos < n && image[order_a[pos]] != n) ++pos;
        if (pos == n) return true;
        const size_t x = order_a[pos];
        for (size_t y = 0; y < n; ++y) {
            if (used[y] || a.element_order(x) != b.element_order(y)) continue;
            image[x] = y;
            used[y] = true;
            if (consistent(x) && extend(pos + 1)) return true;
            image[x] = n;
            used[y] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return image;
}

/// All group homomorphism sections s of the quotient map G -> G/N, i.e.
/// maps with q(s(c)) = c. Empty when the extension does not split.
inline std::vector<std::vector<size_t>> quotient_sections(const GroupTable& g,
                                                          const QuotientGroup& q) {
    const size_t qn = q.table.order();
    std::vector<std::vector<size_t>> candidates(qn);
    for (size_t x = 0; x < g.order(); ++x) candidates[q.coset_of[x]].push_back(x);
    std::vector<size_t> pick(qn, g.order());
    pick[q.table.identity()] = g.identity();
    std::vector<std::vector<size_t>> sections;

    std::function<void(size_t)> extend = [&](size_t c) {
        while (c < qn && pick[c] != g.order()) ++c;
        if (c == qn) {
            for (size_t i = 0; i < qn; ++i)
                for (size_t j = 0; j < qn; ++j)
                    if (g.mul(pick[i], pick[j]) != pick[q.table.mul(i, j)]) return;
            sections.push_back(pick);
            return;
        }
        for (size_t x : candidates[c]) {
            pick[c] = x;
            bool ok = true;
            for (size_t i = 0; i < qn && ok; ++i) {
                if (pick[i] == g.order()) continue;
                ok = pick[q.table.mul(c, i)] == g.order() ||
                     pick[q.table.mul(c, i)] == g.mul(x, pick[i]);
                if (ok)
                    ok = pick[q.table.mul(i, c)] == g.order() ||
                         pick[q.table.mul(i, c)] == g.mul(pick[i], x);
            }
            if (ok) extend(c + 1);
            pick[c] = g.order();
        }
    };
    extend(0);
    std::sort(sections.begin(), sections.end());
    return sections;
}

/// The group algebra k[G]: basis indexed by group elements ("g0", "g1", ...),
/// multiplication from the table, every basis element group-like, and
/// antipode from inversion.
inline HopfPtr group_algebra(const GroupTable& g) {
    const size_t n = g.order();
    std::vector<std::string> names(n);
    for (size_t i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
    std::vector<Rational> mul(n * n * n), comul(n * n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) mul[(i * n + j) * n + g.mul(i, j)] = 1;
        comul[(i * n + i) * n + i] = 1;
    }
    Vec unit(n), counit(n, Rational(1));
    unit[g.identity()] = 1;
    Matrix antipode(n, n);
    for (size_t i = 0; i < n; ++i) antipode(g.inverse(i), i) = 1;
    return std::make_shared<HopfAlgebra>(n, std::move(names), std::move(mul), std::move(comul),
                                         std::move(unit), std::move(counit), std::move(antipode));
}

/// The Hopf morphism k[phi] of a group homomorphism given by element images.
inline Morphism group_hom_morphism(const HopfPtr& dom, const HopfPtr& cod,
                                   const std::vector<size_t>& images) {
    Matrix m(cod->dim(), dom->dim());
    for (size_t j = 0; j < dom->dim(); ++j) m(images[j], j) = 1;
    return Morphism(dom, cod, std::move(m));
}

/// The subspace of k[G] spanned by a subset of group elements.
inline Subspace span_of_elements(const HopfPtr& algebra, const std::vector<size_t>& elements) {
    std::vector<Vec> rows;
    for (size_t e : elements) rows.push_back(unit_vector(algebra->dim(), e));
    return Subspace::span_of(algebra->dim(), rows);
}

/// The group formed by the group-like elements of h under multiplication,
/// when the enumeration is complete and the product of any two group-likes
/// is again on the list. Returns the table together with the elements.
inline std::optional<std::pair<GroupTable, std::vector<Vec>>> group_like_table(
    const HopfAlgebra& h) {
    const GroupLikes likes = group_likes(h);
    if (!likes.complete || likes.elements.empty()) return std::nullopt;
    const auto& els = likes.elements;
    const size_t n = els.size();
    auto position = [&](const Vec& v) -> std::optional<size_t> {
        for (size_t i = 0; i < n; ++i)
            if (els[i] == v) return i;
        return std::nullopt;
    };
    const auto identity = position(h.unit());
    if (!identity) return std::nullopt;
    std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const auto k = position(h.multiply(els[i], els[j]));
            if (!k) return std::nullopt;
            table[i][j] = *k;
        }
    return std::make_pair(GroupTable(n, std::move(table), *identity), els);
}

/// Certifies that h is isomorphic to the group algebra of `expected` by
/// producing the verified Hopf isomorphism k[expected] -> h that matches
/// group-like elements. Returns nullopt when no matching exists.
inline std::optional<Morphism> certify_group_algebra_iso(const GroupTable& expected,
                                                         const HopfPtr& h) {
    const auto likes = group_like_table(*h);
    if (!likes) return std::nullopt;
    const auto iso = find_group_isomorphism(expected, likes->first);
    if (!iso) return std::nullopt;
    const HopfPtr model = group_algebra(expected);
    Matrix m(h->dim(), expected.order());
    for (size_t j = 0; j < expected.order(); ++j) m.set_col(j, likes->second[(*iso)[j]]);
    if (rank(m) != h->dim()) return std::nullopt;
    return Morphism(model, h, std::move(m));
}

}  // namespace hopfcat
