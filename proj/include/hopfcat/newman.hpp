#pragma once

#include <utility>

#include "hopfcat/colimits.hpp"

namespace hopfcat {

/// A left ideal that is also a two-sided coideal; the Newman correspondent
/// of a sub-Hopf algebra. Invariants are verified on construction.
struct LeftIdealCoideal {
    HopfPtr owner;
    Subspace space;
};

inline LeftIdealCoideal make_left_ideal_coideal(HopfPtr owner, Subspace space) {
    const HopfAlgebra& h = *owner;
    if (space.ambient_dim() != h.dim()) throw PreconditionError("subspace ambient dim != algebra dim");
    const size_t n = h.dim(), q = n - space.dim();
    const Matrix proj = detail::quotient_projection(space);
    for (size_t p = 0; p < space.dim(); ++p) {
        const Vec bp = space.basis_vector(p);
        if (h.counit_of(bp) != 0)
            throw PreconditionError("coideal condition fails: counit does not vanish");
        for (size_t i = 0; i < n; ++i)
            if (!space.contains(h.multiply_left_basis(i, bp)))
                throw PreconditionError("subspace is not a left ideal");
        const Vec w = h.comultiply(bp);
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
        if (!projected.is_zero())
            throw PreconditionError("subspace is not a two-sided coideal");
    }
    return {std::move(owner), std::move(space)};
}

/// tau(G) = H G^+: the left ideal generated by the augmentation part of a
/// sub-Hopf algebra.
inline LeftIdealCoideal tau(const HopfPtr& h, const Subspace& sub_hopf) {
    if (!is_sub_hopf(*h, sub_hopf)) throw PreconditionError("tau: not a sub-Hopf algebra");
    const Subspace positive = intersect(sub_hopf, augmentation_ideal(*h));
    std::vector<Vec> rows;
    for (size_t i = 0; i < h->dim(); ++i)
        for (size_t p = 0; p < positive.dim(); ++p)
            rows.push_back(h->multiply_left_basis(i, positive.basis_vector(p)));
    return make_left_ideal_coideal(h, Subspace::span_of(h->dim(), rows));
}

/// sigma(I) = Hker(H -> H/I), computed on the coalgebra quotient: the
/// solution space of x_1 (x) pi(x_2) = x (x) pi(1), where pi is the linear
/// projection with kernel I. Only the coideal property of I is needed.
inline Subspace sigma(const LeftIdealCoideal& ideal) {
    const HopfAlgebra& h = *ideal.owner;
    const size_t n = h.dim();
    const Matrix proj = detail::quotient_projection(ideal.space);
    const size_t q = proj.rows();
    const Vec pi_unit = proj.apply(h.unit());
    Matrix system(n * q, n);
    for (size_t x = 0; x < n; ++x) {
        for (const auto& t : h.comul_terms(x))
            for (size_t r = 0; r < q; ++r)
                if (proj(r, t.right) != 0) system(t.left * q + r, x) += t.coeff * proj(r, t.right);
        for (size_t r = 0; r < q; ++r) system(x * q + r, x) -= pi_unit[r];
    }
    const Subspace result = kernel_space(system);
    if (!is_sub_hopf(h, result))
        throw InvariantError("sigma of a left-ideal coideal is not a sub-Hopf algebra");
    return result;
}

/// The Newman roundtrip sigma(tau(G)) = G.
inline bool verify_newman_roundtrip(const HopfPtr& h, const Subspace& sub_hopf) {
    return sigma(tau(h, sub_hopf)) == sub_hopf;
}

/// For a normal sub-Hopf algebra G of H this checks, first, that the
/// two-sided ideal H G^+ H equals the left ideal H G^+, and second, that G
/// is recovered as the Hopf kernel of the projection H -> H / <G^+>.
inline bool verify_normal_kernel_lemma(const HopfPtr& h, const Subspace& sub) {
    if (!is_normal_sub_hopf(*h, sub))
        throw PreconditionError("normal-kernel lemma applies to normal sub-Hopf algebras");
    const LeftIdealCoideal left_ideal = tau(h, sub);
    const Subspace two_sided =
        detail::close_subspace(*h, left_ideal.space, /*left=*/false, /*right=*/true, /*antipode=*/false);
    if (!(two_sided == left_ideal.space)) return false;
    const QuotientPresentation q = quotient(h, two_sided);
    return hopf_kernel(q.projection).space == sub;
}

}  // namespace hopfcat
