#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hopfcat/rational.hpp"

namespace hopfcat {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

inline Vec unit_vector(size_t dim, size_t index) {
    Vec v(dim);
    v[index] = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Dense rational matrix, row-major. Linear maps k^n -> k^m are m x n
/// matrices acting on coordinate columns.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    Vec row(size_t i) const {
        return Vec(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    }

    Vec col(size_t j) const {
        Vec v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_row(size_t i, const Vec& v) {
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    void set_col(size_t j, const Vec& v) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Matrix-vector product; v has cols() entries.
    Vec apply(const Vec& v) const {
        Vec out(rows_);
        for (size_t j = 0; j < cols_; ++j) {
            if (v[j] == 0) continue;
            for (size_t i = 0; i < rows_; ++i) {
                const Rational& a = (*this)(i, j);
                if (a != 0) out[i] += a * v[j];
            }
        }
        return out;
    }

    Matrix operator*(const Matrix& rhs) const {
        Matrix out(rows_, rhs.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (size_t j = 0; j < rhs.cols_; ++j) {
                    const Rational& b = rhs(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        Matrix out(rows_, cols_);
        for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (x != 0) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Kronecker product: (A (x) B)[(i*p+r), (j*q+c)] = A(i,j) * B(r,c).
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const Rational& v = a(i, j);
            if (v == 0) continue;
            for (size_t r = 0; r < b.rows(); ++r)
                for (size_t c = 0; c < b.cols(); ++c)
                    if (b(r, c) != 0) out(i * b.rows() + r, j * b.cols() + c) = v * b(r, c);
        }
    return out;
}

/// Tensor of coordinate vectors, flat index i * dim(y) + j.
inline Vec kron_vec(const Vec& x, const Vec& y) {
    Vec out(x.size() * y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) out[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

inline Matrix vstack(const Matrix& top, const Matrix& bottom) {
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
        for (size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
        for (size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

struct RrefResult {
    Matrix reduced;                // zero rows removed
    std::vector<size_t> pivots;    // strictly increasing pivot columns
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivot selection is
/// the first row with a nonzero entry in the leftmost unsolved column; rows
/// are normalized to a leading 1, so the result is the canonical RREF with
/// zero rows dropped.
inline RrefResult rref(Matrix m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && m(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (size_t j = 0; j < cols; ++j) std::swap(m(pivot_row, j), m(sel, j));
        const Rational inv = Rational(1) / m(pivot_row, col);
        for (size_t j = col; j < cols; ++j)
            if (m(pivot_row, j) != 0) m(pivot_row, j) *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const Rational factor = m(r, col);
            if (factor == 0) continue;
            for (size_t j = col; j < cols; ++j)
                if (m(pivot_row, j) != 0) m(r, j) -= factor * m(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    Matrix reduced(pivots.size(), cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t j = 0; j < cols; ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

inline size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

}  // namespace hopfcat
