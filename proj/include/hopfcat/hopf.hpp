#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcat/error.hpp"
#include "hopfcat/matrix.hpp"
#include "hopfcat/subspace.hpp"

namespace hopfcat {

/// One summand e_left (x) e_right of a comultiplication value.
struct ComulTerm {
    size_t left, right;
    Rational coeff;
};

/// A finite-dimensional Hopf algebra over the rationals, given by structure
/// constants on a distinguished basis:
///   mul(i,j,k)   -- coefficient of e_k in e_i * e_j
///   comul(i,j,k) -- coefficient of e_j (x) e_k in Delta(e_i)
/// together with the unit vector, the counit covector and the antipode
/// matrix. Construction validates shapes only; the axioms are a separate,
/// reportable check (verify_hopf).
///
/// Values are immutable after construction and safe to share across threads.
class HopfAlgebra {
public:
    HopfAlgebra(size_t dim, std::vector<std::string> basis_names, std::vector<Rational> mul,
                std::vector<Rational> comul, Vec unit, Vec counit, Matrix antipode)
        : dim_(dim),
          names_(std::move(basis_names)),
          mul_(std::move(mul)),
          comul_(std::move(comul)),
          unit_(std::move(unit)),
          counit_(std::move(counit)),
          antipode_(std::move(antipode)) {
        if (dim_ == 0) throw SchemaError("Hopf algebra dimension must be positive");
        if (names_.size() != dim_) throw SchemaError("basis name count does not match dim");
        if (mul_.size() != dim_ * dim_ * dim_) throw SchemaError("mul tensor has wrong size");
        if (comul_.size() != dim_ * dim_ * dim_) throw SchemaError("comul tensor has wrong size");
        if (unit_.size() != dim_) throw SchemaError("unit vector has wrong size");
        if (counit_.size() != dim_) throw SchemaError("counit covector has wrong size");
        if (antipode_.rows() != dim_ || antipode_.cols() != dim_)
            throw SchemaError("antipode matrix has wrong shape");
        build_sparse_views();
    }

    size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& unit() const { return unit_; }
    const Vec& counit_row() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }

    const Rational& mul(size_t i, size_t j, size_t k) const { return mul_[(i * dim_ + j) * dim_ + k]; }
    const Rational& comul(size_t i, size_t j, size_t k) const { return comul_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rational>& mul_tensor() const { return mul_; }
    const std::vector<Rational>& comul_tensor() const { return comul_; }

    /// Nonzero structure constants of e_i * e_j, as (k, coefficient) pairs.
    const std::vector<std::pair<size_t, Rational>>& mul_terms(size_t i, size_t j) const {
        return mul_rows_[i * dim_ + j];
    }

    /// Nonzero summands of Delta(e_i).
    const std::vector<ComulTerm>& comul_terms(size_t i) const { return comul_rows_[i]; }

    Vec multiply(const Vec& x, const Vec& y) const {
        Vec out(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                const Rational c = x[i] * y[j];
                for (const auto& [k, v] : mul_terms(i, j)) out[k] += c * v;
            }
        }
        return out;
    }

    Vec multiply_basis(size_t i, size_t j) const {
        Vec out(dim_);
        for (const auto& [k, v] : mul_terms(i, j)) out[k] = v;
        return out;
    }

    /// e_i * v
    Vec multiply_left_basis(size_t i, const Vec& v) const {
        Vec out(dim_);
        for (size_t j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            for (const auto& [k, c] : mul_terms(i, j)) out[k] += v[j] * c;
        }
        return out;
    }

    /// v * e_j
    Vec multiply_right_basis(const Vec& v, size_t j) const {
        Vec out(dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (v[i] == 0) continue;
            for (const auto& [k, c] : mul_terms(i, j)) out[k] += v[i] * c;
        }
        return out;
    }

    Rational counit_of(const Vec& v) const {
        Rational out = 0;
        for (size_t i = 0; i < dim_; ++i)
            if (v[i] != 0) out += counit_[i] * v[i];
        return out;
    }

    Vec antipode_of(const Vec& v) const { return antipode_.apply(v); }

    /// Delta(v) as a dense vector on the flat index j*dim + k.
    Vec comultiply(const Vec& v) const {
        Vec out(dim_ * dim_);
        for (size_t i = 0; i < dim_; ++i) {
            if (v[i] == 0) continue;
            for (const auto& t : comul_terms(i)) out[t.left * dim_ + t.right] += v[i] * t.coeff;
        }
        return out;
    }

    /// The comultiplication as a dim^2 x dim matrix on coordinate columns.
    Matrix comul_map() const {
        Matrix m(dim_ * dim_, dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (const auto& t : comul_terms(i)) m(t.left * dim_ + t.right, i) = t.coeff;
        return m;
    }

    /// The multiplication as a dim x dim^2 matrix on coordinate columns.
    Matrix mul_map() const {
        Matrix m(dim_, dim_ * dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : mul_terms(i, j)) m(k, i * dim_ + j) = c;
        return m;
    }

    /// Structure-constant equality, ignoring basis names.
    bool structure_equals(const HopfAlgebra& other) const {
        return dim_ == other.dim_ && mul_ == other.mul_ && comul_ == other.comul_ &&
               unit_ == other.unit_ && counit_ == other.counit_ && antipode_ == other.antipode_;
    }

private:
    void build_sparse_views() {
        mul_rows_.resize(dim_ * dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) {
                auto& row = mul_rows_[i * dim_ + j];
                for (size_t k = 0; k < dim_; ++k)
                    if (mul(i, j, k) != 0) row.emplace_back(k, mul(i, j, k));
            }
        comul_rows_.resize(dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j)
                for (size_t k = 0; k < dim_; ++k)
                    if (comul(i, j, k) != 0) comul_rows_[i].push_back({j, k, comul(i, j, k)});
    }

    size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> mul_, comul_;
    Vec unit_, counit_;
    Matrix antipode_;
    std::vector<std::vector<std::pair<size_t, Rational>>> mul_rows_;
    std::vector<std::vector<ComulTerm>> comul_rows_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// One boolean per Hopf axiom, so a failing input reports exactly what broke.
struct VerificationReport {
    bool associative = false;
    bool unital = false;
    bool coassociative = false;
    bool counital = false;
    bool bialgebra = false;
    bool antipode_left = false;
    bool antipode_right = false;
    bool cocommutative = false;
    bool antipode_involutive = false;

    bool all() const {
        return associative && unital && coassociative && counital && bialgebra && antipode_left &&
               antipode_right && cocommutative && antipode_involutive;
    }

    std::vector<std::pair<std::string, bool>> entries() const {
        return {{"associative", associative},
                {"unital", unital},
                {"coassociative", coassociative},
                {"counital", counital},
                {"bialgebra", bialgebra},
                {"antipode_left", antipode_left},
                {"antipode_right", antipode_right},
                {"cocommutative", cocommutative},
                {"antipode_involutive", antipode_involutive}};
    }
};

namespace detail {

/// Dense accumulator with a touched-index list, so sparse sums over a large
/// index range clear in O(#nonzero).
class Accumulator {
public:
    explicit Accumulator(size_t size) : buf_(size) {}

    void add(size_t i, const Rational& c) {
        if (c == 0) return;
        if (buf_[i] == 0) touched_.push_back(i);
        buf_[i] += c;
    }

    void clear() {
        for (size_t i : touched_) buf_[i] = 0;
        touched_.clear();
    }

    bool equals(const Accumulator& other) const {
        for (size_t i : touched_)
            if (buf_[i] != other.buf_[i]) return false;
        for (size_t i : other.touched_)
            if (buf_[i] != other.buf_[i]) return false;
        return true;
    }

    bool is_zero() const {
        for (size_t i : touched_)
            if (buf_[i] != 0) return false;
        return true;
    }

    const Rational& operator[](size_t i) const { return buf_[i]; }

private:
    Vec buf_;
    std::vector<size_t> touched_;
};

}  // namespace detail

/// Checks every Hopf-algebra axiom plus cocommutativity and involutivity of
/// the antipode, one boolean per law.
inline VerificationReport verify_hopf(const HopfAlgebra& h) {
    const size_t n = h.dim();
    VerificationReport r;
    detail::Accumulator lhs(n * n * n), rhs(n * n * n);

    r.associative = true;
    for (size_t i = 0; i < n && r.associative; ++i)
        for (size_t j = 0; j < n && r.associative; ++j) {
            const auto& rij = h.mul_terms(i, j);
            for (size_t k = 0; k < n && r.associative; ++k) {
                lhs.clear();
                rhs.clear();
                for (const auto& [l, c] : rij)
                    for (const auto& [m, d] : h.mul_terms(l, k)) lhs.add(m, c * d);
                for (const auto& [l, c] : h.mul_terms(j, k))
                    for (const auto& [m, d] : h.mul_terms(i, l)) rhs.add(m, c * d);
                r.associative = lhs.equals(rhs);
            }
        }

    r.unital = true;
    for (size_t i = 0; i < n && r.unital; ++i) {
        const Vec left = h.multiply(h.unit(), unit_vector(n, i));
        const Vec right = h.multiply(unit_vector(n, i), h.unit());
        r.unital = left == unit_vector(n, i) && right == unit_vector(n, i);
    }

    r.coassociative = true;
    for (size_t i = 0; i < n && r.coassociative; ++i) {
        lhs.clear();
        rhs.clear();
        for (const auto& t : h.comul_terms(i)) {
            for (const auto& u : h.comul_terms(t.left))
                lhs.add((u.left * n + u.right) * n + t.right, t.coeff * u.coeff);
            for (const auto& u : h.comul_terms(t.right))
                rhs.add((t.left * n + u.left) * n + u.right, t.coeff * u.coeff);
        }
        r.coassociative = lhs.equals(rhs);
    }

    r.counital = true;
    for (size_t i = 0; i < n && r.counital; ++i) {
        Vec left(n), right(n);
        for (const auto& t : h.comul_terms(i)) {
            left[t.right] += h.counit_row()[t.left] * t.coeff;
            right[t.left] += h.counit_row()[t.right] * t.coeff;
        }
        r.counital = left == unit_vector(n, i) && right == unit_vector(n, i);
    }

    r.bialgebra = h.counit_of(h.unit()) == 1 && h.comultiply(h.unit()) == kron_vec(h.unit(), h.unit());
    detail::Accumulator pair_lhs(n * n), pair_rhs(n * n);
    for (size_t i = 0; i < n && r.bialgebra; ++i)
        for (size_t j = 0; j < n && r.bialgebra; ++j) {
            pair_lhs.clear();
            pair_rhs.clear();
            Rational eps_product = 0;
            for (const auto& [l, c] : h.mul_terms(i, j)) {
                eps_product += c * h.counit_row()[l];
                for (const auto& t : h.comul_terms(l)) pair_lhs.add(t.left * n + t.right, c * t.coeff);
            }
            for (const auto& ti : h.comul_terms(i))
                for (const auto& tj : h.comul_terms(j)) {
                    const Rational c = ti.coeff * tj.coeff;
                    for (const auto& [u, a] : h.mul_terms(ti.left, tj.left))
                        for (const auto& [v, b] : h.mul_terms(ti.right, tj.right))
                            pair_rhs.add(u * n + v, c * a * b);
                }
            r.bialgebra = pair_lhs.equals(pair_rhs) &&
                          eps_product == h.counit_row()[i] * h.counit_row()[j];
        }

    r.antipode_left = r.antipode_right = true;
    for (size_t i = 0; i < n && (r.antipode_left || r.antipode_right); ++i) {
        Vec left(n), right(n);
        for (const auto& t : h.comul_terms(i)) {
            const Vec s_first = h.antipode().col(t.left);
            const Vec s_second = h.antipode().col(t.right);
            const Vec l = h.multiply_right_basis(s_first, t.right);
            const Vec rr = h.multiply_left_basis(t.left, s_second);
            for (size_t k = 0; k < n; ++k) {
                left[k] += t.coeff * l[k];
                right[k] += t.coeff * rr[k];
            }
        }
        Vec expected(n);
        for (size_t k = 0; k < n; ++k) expected[k] = h.counit_row()[i] * h.unit()[k];
        if (left != expected) r.antipode_left = false;
        if (right != expected) r.antipode_right = false;
    }

    r.cocommutative = true;
    for (size_t i = 0; i < n && r.cocommutative; ++i)
        for (size_t j = 0; j < n && r.cocommutative; ++j)
            for (size_t k = 0; k < n; ++k)
                if (h.comul(i, j, k) != h.comul(i, k, j)) {
                    r.cocommutative = false;
                    break;
                }

    r.antipode_involutive = h.antipode() * h.antipode() == Matrix::identity(n);
    return r;
}

inline bool is_commutative(const HopfAlgebra& h) {
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = i + 1; j < h.dim(); ++j)
            for (size_t k = 0; k < h.dim(); ++k)
                if (h.mul(i, j, k) != h.mul(j, i, k)) return false;
    return true;
}

inline bool is_cocommutative(const HopfAlgebra& h) {
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = 0; j < h.dim(); ++j)
            for (size_t k = j + 1; k < h.dim(); ++k)
                if (h.comul(i, j, k) != h.comul(i, k, j)) return false;
    return true;
}

/// Kernel of the counit: the augmentation ideal.
inline Subspace augmentation_ideal(const HopfAlgebra& h) {
    Matrix row(1, h.dim());
    row.set_row(0, h.counit_row());
    return kernel_space(row);
}

namespace detail {

/// Linear projection with kernel exactly s: reduce by the RREF basis, then
/// read off the complement coordinates. Returns a (codim x n) matrix.
inline Matrix quotient_projection(const Subspace& s) {
    const size_t n = s.ambient_dim();
    const auto coords = complement_coords(s);
    Matrix p(coords.size(), n);
    for (size_t j = 0; j < n; ++j) {
        const Vec reduced = s.reduce(unit_vector(n, j));
        for (size_t r = 0; r < coords.size(); ++r) p(r, j) = reduced[coords[r]];
    }
    return p;
}

/// Membership of a tensor w (dense, flat index on n*n) in span{b_p (x) b_q},
/// using that RREF pivot coordinates read off the only possible coefficients.
inline bool tensor_square_contains(const Subspace& s, const Vec& w) {
    const size_t n = s.ambient_dim();
    const size_t d = s.dim();
    std::map<size_t, Rational> residual;
    for (size_t idx = 0; idx < w.size(); ++idx)
        if (w[idx] != 0) residual[idx] = w[idx];
    for (size_t p = 0; p < d; ++p)
        for (size_t q = 0; q < d; ++q) {
            const Rational alpha = w[s.pivot_cols()[p] * n + s.pivot_cols()[q]];
            if (alpha == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                const Rational& bp = s.basis()(p, j);
                if (bp == 0) continue;
                for (size_t k = 0; k < n; ++k) {
                    const Rational& bq = s.basis()(q, k);
                    if (bq == 0) continue;
                    auto& entry = residual[j * n + k];
                    entry -= alpha * bp * bq;
                    if (entry == 0) residual.erase(j * n + k);
                }
            }
        }
    return residual.empty();
}

}  // namespace detail

/// True iff s contains the unit and is closed under multiplication, the
/// antipode, and comultiplication (Delta(s) inside s (x) s).
inline bool is_sub_hopf(const HopfAlgebra& h, const Subspace& s) {
    if (s.ambient_dim() != h.dim()) throw PreconditionError("subspace ambient dim != algebra dim");
    if (!s.contains(h.unit())) return false;
    for (size_t p = 0; p < s.dim(); ++p) {
        const Vec bp = s.basis_vector(p);
        if (!s.contains(h.antipode_of(bp))) return false;
        for (size_t q = 0; q < s.dim(); ++q)
            if (!s.contains(h.multiply(bp, s.basis_vector(q)))) return false;
        if (!detail::tensor_square_contains(s, h.comultiply(bp))) return false;
    }
    return true;
}

/// True iff s is a sub-Hopf algebra with y_1 a S(y_2) in s for every basis
/// element y of h and a of s.
inline bool is_normal_sub_hopf(const HopfAlgebra& h, const Subspace& s) {
    if (!is_sub_hopf(h, s)) throw PreconditionError("is_normal_sub_hopf: not a sub-Hopf algebra");
    const size_t n = h.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t p = 0; p < s.dim(); ++p) {
            const Vec a = s.basis_vector(p);
            Vec conjugate(n);
            for (const auto& t : h.comul_terms(i)) {
                const Vec ya = h.multiply_left_basis(t.left, a);
                const Vec yas = h.multiply(ya, h.antipode().col(t.right));
                for (size_t k = 0; k < n; ++k) conjugate[k] += t.coeff * yas[k];
            }
            if (!s.contains(conjugate)) return false;
        }
    return true;
}

/// True iff s is a two-sided ideal, a two-sided coideal (Delta(s) inside
/// s (x) H + H (x) s and eps(s) = 0) and S(s) inside s.
inline bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& s) {
    if (s.ambient_dim() != h.dim()) throw PreconditionError("subspace ambient dim != algebra dim");
    if (s.dim() == 0) return true;
    const size_t n = h.dim();
    for (size_t p = 0; p < s.dim(); ++p) {
        const Vec bp = s.basis_vector(p);
        if (h.counit_of(bp) != 0) return false;
        if (!s.contains(h.antipode_of(bp))) return false;
        for (size_t i = 0; i < n; ++i) {
            if (!s.contains(h.multiply_left_basis(i, bp))) return false;
            if (!s.contains(h.multiply_right_basis(bp, i))) return false;
        }
    }
    // Delta(s) in s(x)H + H(x)s iff Delta(s) dies in (H/s)(x)(H/s).
    const Matrix proj = detail::quotient_projection(s);
    const size_t q = proj.rows();
    for (size_t p = 0; p < s.dim(); ++p) {
        const Vec w = h.comultiply(s.basis_vector(p));
        Matrix projected(q, q);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                const Rational& c = w[j * n + k];
                if (c == 0) continue;
                for (size_t rj = 0; rj < q; ++rj) {
                    if (proj(rj, j) == 0) continue;
                    for (size_t rk = 0; rk < q; ++rk)
                        if (proj(rk, k) != 0) projected(rj, rk) += c * proj(rj, j) * proj(rk, k);
                }
            }
        if (!projected.is_zero()) return false;
    }
    return true;
}

/// Result of group-like enumeration. `complete` is true only on the
/// diagonal fast path, where the enumeration is provably exhaustive.
struct GroupLikes {
    std::vector<Vec> elements;
    bool complete = false;
};

namespace detail {

/// Characteristic polynomial coefficients (monic, degree n) by the
/// Faddeev-LeVerrier recurrence. coeffs[k] multiplies lambda^k.
inline std::vector<Rational> characteristic_polynomial(const Matrix& a) {
    const size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix m = a;
    for (size_t k = 1; k <= n; ++k) {
        Rational tr = 0;
        for (size_t i = 0; i < n; ++i) tr += m(i, i);
        const Rational ck = tr / Rational(k);
        c[n - k] = -ck;
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) m(i, i) -= ck;
        m = a * m;
    }
    return c;
}

inline std::vector<Integer> positive_divisors(Integer v, size_t limit = 1u << 20) {
    if (v < 0) v = -v;
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= v; ++d) {
        if ((size_t)d > limit) return {};  // give up on huge constant terms
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
        }
    }
    return divs;
}

/// All rational roots of the polynomial sum coeffs[k] lambda^k.
inline std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    // Clear denominators to an integer polynomial.
    Integer lcm = 1;
    for (const auto& c : coeffs) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> a(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k)
        a[k] = numerator(coeffs[k]) * (lcm / denominator(coeffs[k]));
    std::vector<Rational> roots;
    auto value_at = [&](const Rational& x) {
        Rational v = 0;
        for (size_t k = a.size(); k-- > 0;) v = v * x + Rational(a[k]);
        return v;
    };
    size_t lowest = 0;
    while (lowest < a.size() && a[lowest] == 0) ++lowest;
    if (lowest == a.size()) return roots;
    if (lowest > 0) roots.push_back(0);
    size_t highest = a.size() - 1;
    while (a[highest] == 0) --highest;
    for (const Integer& p : positive_divisors(a[lowest]))
        for (const Integer& q : positive_divisors(a[highest])) {
            for (int sign : {1, -1}) {
                const Rational candidate(sign * p, q);
                if (value_at(candidate) == 0 &&
                    std::find(roots.begin(), roots.end(), candidate) == roots.end())
                    roots.push_back(candidate);
            }
        }
    return roots;
}

}  // namespace detail

inline bool is_group_like(const HopfAlgebra& h, const Vec& x) {
    if (h.counit_of(x) != 1) return false;
    return h.comultiply(x) == kron_vec(x, x);
}

/// Enumerates group-like elements (Delta x = x (x) x, eps(x) = 1).
///
/// When every basis comultiplication is diagonal (Delta e_i = e_i (x) e_i)
/// the enumeration is complete: group-likes are exactly the basis vectors.
/// Otherwise candidates are recovered by pivoting: a group-like with
/// x_p != 0 is an eigenvector of the slice matrix M_p[j][i] = comul(i,p,j)
/// with rational eigenvalue x_p. Candidates from one-dimensional eigenspaces
/// are checked exactly; the result is flagged possibly incomplete.
inline GroupLikes group_likes(const HopfAlgebra& h) {
    const size_t n = h.dim();
    bool diagonal = true;
    for (size_t i = 0; i < n && diagonal; ++i) {
        const auto& terms = h.comul_terms(i);
        diagonal = terms.size() == 1 && terms[0].left == i && terms[0].right == i && terms[0].coeff == 1;
    }
    GroupLikes out;
    if (diagonal) {
        out.complete = true;
        for (size_t i = 0; i < n; ++i)
            if (h.counit_row()[i] == 1) out.elements.push_back(unit_vector(n, i));
        return out;
    }
    out.complete = false;
    if (n > 24) return out;
    for (size_t p = 0; p < n; ++p) {
        Matrix slice(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) slice(j, i) = h.comul(i, p, j);
        for (const Rational& lambda : detail::rational_roots(detail::characteristic_polynomial(slice))) {
            Matrix shifted = slice;
            for (size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
            const Subspace eigen = kernel_space(shifted);
            if (eigen.dim() != 1) continue;
            Vec candidate = eigen.basis_vector(0);
            const Rational eps = h.counit_of(candidate);
            if (eps == 0) continue;
            for (auto& c : candidate) c /= eps;
            if (!is_group_like(h, candidate)) continue;
            if (std::find(out.elements.begin(), out.elements.end(), candidate) == out.elements.end())
                out.elements.push_back(candidate);
        }
    }
    return out;
}

/// A linear map between Hopf algebras, verified on construction to respect
/// multiplication, unit, comultiplication, counit and antipode. Invalid
/// matrices are rejected, so no unverified morphism circulates.
class Morphism {
public:
    Morphism(HopfPtr dom, HopfPtr cod, Matrix matrix)
        : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
        verify();
    }

    const HopfPtr& dom() const { return dom_; }
    const HopfPtr& cod() const { return cod_; }
    const Matrix& matrix() const { return matrix_; }

    Vec apply(const Vec& v) const { return matrix_.apply(v); }
    Vec apply_basis(size_t i) const { return matrix_.col(i); }

    bool is_surjective() const { return rank(matrix_) == cod_->dim(); }
    bool is_injective() const { return kernel_space(matrix_).dim() == 0; }

    Subspace linear_kernel() const { return kernel_space(matrix_); }
    Subspace linear_image() const { return image_space(matrix_); }

private:
    void verify() const {
        const size_t nd = dom_->dim(), nc = cod_->dim();
        if (matrix_.rows() != nc || matrix_.cols() != nd)
            throw SchemaError("morphism matrix must be cod.dim x dom.dim");
        if (matrix_.apply(dom_->unit()) != cod_->unit())
            throw PreconditionError("morphism does not preserve the unit");
        std::vector<std::vector<std::pair<size_t, Rational>>> cols(nd);
        for (size_t i = 0; i < nd; ++i)
            for (size_t r = 0; r < nc; ++r)
                if (matrix_(r, i) != 0) cols[i].emplace_back(r, matrix_(r, i));
        for (size_t i = 0; i < nd; ++i) {
            Rational eps = 0;
            for (const auto& [r, v] : cols[i]) eps += cod_->counit_row()[r] * v;
            if (eps != dom_->counit_row()[i])
                throw PreconditionError("morphism does not preserve the counit");
        }
        detail::Accumulator one(nc), other(nc);
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = 0; j < nd; ++j) {
                one.clear();
                other.clear();
                for (const auto& [k, c] : dom_->mul_terms(i, j))
                    for (const auto& [r, v] : cols[k]) one.add(r, c * v);
                for (const auto& [ri, vi] : cols[i])
                    for (const auto& [rj, vj] : cols[j])
                        for (const auto& [k, c] : cod_->mul_terms(ri, rj)) other.add(k, vi * vj * c);
                if (!one.equals(other)) throw PreconditionError("morphism is not an algebra map");
            }
        detail::Accumulator lhs(nc * nc), rhs(nc * nc);
        for (size_t i = 0; i < nd; ++i) {
            lhs.clear();
            rhs.clear();
            for (const auto& t : dom_->comul_terms(i))
                for (const auto& [u, a] : cols[t.left])
                    for (const auto& [v, b] : cols[t.right]) lhs.add(u * nc + v, t.coeff * a * b);
            for (const auto& [l, c] : cols[i])
                for (const auto& t : cod_->comul_terms(l))
                    rhs.add(t.left * nc + t.right, c * t.coeff);
            if (!lhs.equals(rhs)) throw PreconditionError("morphism is not a coalgebra map");
        }
        if (matrix_ * dom_->antipode() != cod_->antipode() * matrix_)
            throw PreconditionError("morphism does not commute with the antipode");
    }

    HopfPtr dom_, cod_;
    Matrix matrix_;
};

inline bool same_object(const HopfPtr& a, const HopfPtr& b) {
    return a == b || a->structure_equals(*b);
}

inline Morphism identity_morphism(const HopfPtr& h) {
    return Morphism(h, h, Matrix::identity(h->dim()));
}

/// g after f. The middle objects must agree structurally.
inline Morphism compose(const Morphism& g, const Morphism& f) {
    if (!same_object(f.cod(), g.dom())) throw PreconditionError("compose: middle objects differ");
    return Morphism(f.dom(), g.cod(), g.matrix() * f.matrix());
}

/// The ground field as a Hopf algebra: the zero object of the category.
inline HopfPtr ground_field() {
    std::vector<Rational> mul{1}, comul{1};
    return std::make_shared<HopfAlgebra>(1, std::vector<std::string>{"1"}, mul, comul, Vec{1},
                                         Vec{1}, Matrix::identity(1));
}

/// The counit as the unique morphism H -> k.
inline Morphism terminal_morphism(const HopfPtr& h, const HopfPtr& field) {
    Matrix m(1, h->dim());
    m.set_row(0, h->counit_row());
    return Morphism(h, field, std::move(m));
}

/// The unit as the unique morphism k -> H.
inline Morphism initial_morphism(const HopfPtr& field, const HopfPtr& h) {
    Matrix m(h->dim(), 1);
    m.set_col(0, h->unit());
    return Morphism(field, h, std::move(m));
}

}  // namespace hopfcat
