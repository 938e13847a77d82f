#pragma once

#include <optional>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/matrix.hpp"

namespace hopfcat {

/// A linear subspace of k^n in canonical form: the basis matrix is the
/// unique RREF basis with strictly increasing pivot columns. Two Subspaces
/// are equal as sets iff their representations compare equal.
class Subspace {
public:
    static Subspace zero(size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim), {}); }

    static Subspace full(size_t ambient_dim) {
        std::vector<size_t> pivots(ambient_dim);
        for (size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
        return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(pivots));
    }

    /// Canonicalizes an arbitrary spanning set given as matrix rows.
    static Subspace span_of(const Matrix& rows) {
        auto r = rref(rows);
        return Subspace(rows.cols(), std::move(r.reduced), std::move(r.pivots));
    }

    static Subspace span_of(size_t ambient_dim, const std::vector<Vec>& vectors) {
        if (vectors.empty()) return zero(ambient_dim);
        return span_of(Matrix::from_rows(vectors));
    }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }
    Vec basis_vector(size_t i) const { return basis_.row(i); }

    /// True when the basis consists of standard coordinate vectors, which
    /// several consumers exploit for sparse handling.
    bool is_coordinate() const { return coordinate_; }

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

    /// Residual of v after eliminating all pivot coordinates: zero iff v
    /// lies in the subspace.
    Vec reduce(const Vec& v) const {
        Vec r = v;
        for (size_t i = 0; i < pivots_.size(); ++i) {
            const Rational factor = r[pivots_[i]];
            if (factor == 0) continue;
            for (size_t j = 0; j < ambient_; ++j) {
                const Rational& b = basis_(i, j);
                if (b != 0) r[j] -= factor * b;
            }
        }
        return r;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    /// Coefficients of v in the canonical basis, or nullopt if v is outside.
    /// With an RREF basis the coefficient on row i is just v at the i-th
    /// pivot column.
    std::optional<Vec> coordinates(const Vec& v) const {
        if (!contains(v)) return std::nullopt;
        Vec c(dim());
        for (size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

private:
    Subspace(size_t ambient, Matrix basis, std::vector<size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {
        coordinate_ = true;
        for (size_t i = 0; i < basis_.rows() && coordinate_; ++i)
            for (size_t j = 0; j < ambient_ && coordinate_; ++j)
                if (basis_(i, j) != (j == pivots_[i] ? 1 : 0)) coordinate_ = false;
    }

    size_t ambient_;
    Matrix basis_;
    std::vector<size_t> pivots_;
    bool coordinate_ = false;
};

/// Exact null space of m, as a subspace of k^cols.
inline Subspace kernel_space(const Matrix& m) {
    const auto r = rref(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v(n);
        v[j] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, j);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(n, basis);
}

/// Exact column space of m, as a subspace of k^rows.
inline Subspace image_space(const Matrix& m) { return Subspace::span_of(m.transpose()); }

namespace detail {
inline void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw PreconditionError("subspace ambient dimensions differ");
}
}  // namespace detail

inline Subspace sum(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b);
    if (a.dim() == 0) return b;
    if (b.dim() == 0) return a;
    return Subspace::span_of(vstack(a.basis(), b.basis()));
}

/// Zassenhaus intersection: row-reduce [A|A; B|0]; rows whose left block is
/// zero carry an intersection basis in the right block.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b);
    const size_t n = a.ambient_dim();
    Matrix block(a.dim() + b.dim(), 2 * n);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < n; ++j) {
            block(i, j) = a.basis()(i, j);
            block(i, n + j) = a.basis()(i, j);
        }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
    const auto r = rref(block);
    std::vector<Vec> rows;
    for (size_t i = 0; i < r.reduced.rows(); ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < n && left_zero; ++j) left_zero = r.reduced(i, j) == 0;
        if (!left_zero) continue;
        Vec v(n);
        for (size_t j = 0; j < n; ++j) v[j] = r.reduced(i, n + j);
        if (!is_zero(v)) rows.push_back(std::move(v));
    }
    return Subspace::span_of(n, rows);
}

/// Indices of the standard coordinates that are not pivot columns of s;
/// their classes form a basis of the quotient k^n / s.
inline std::vector<size_t> complement_coords(const Subspace& s) {
    std::vector<bool> is_pivot(s.ambient_dim(), false);
    for (size_t p : s.pivot_cols()) is_pivot[p] = true;
    std::vector<size_t> out;
    for (size_t j = 0; j < s.ambient_dim(); ++j)
        if (!is_pivot[j]) out.push_back(j);
    return out;
}

/// The same complement as standard basis vectors.
inline std::vector<Vec> complement_basis(const Subspace& s) {
    std::vector<Vec> out;
    for (size_t j : complement_coords(s)) out.push_back(unit_vector(s.ambient_dim(), j));
    return out;
}

}  // namespace hopfcat
