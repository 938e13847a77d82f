#pragma once

#include <string>
#include <vector>

#include "hopfcat/limits.hpp"

namespace hopfcat {

namespace detail {

/// Fixed-point closure of a subspace under the selected operations.
/// Terminates because the dimension strictly increases at every pass.
inline Subspace close_subspace(const HopfAlgebra& h, Subspace current, bool left_mul,
                               bool right_mul, bool antipode) {
    const size_t n = h.dim();
    for (;;) {
        std::vector<Vec> rows;
        for (size_t p = 0; p < current.dim(); ++p) rows.push_back(current.basis_vector(p));
        const size_t before = current.dim();
        for (size_t p = 0; p < before; ++p) {
            const Vec bp = current.basis_vector(p);
            if (antipode) rows.push_back(h.antipode_of(bp));
            for (size_t i = 0; i < n; ++i) {
                if (left_mul) rows.push_back(h.multiply_left_basis(i, bp));
                if (right_mul) rows.push_back(h.multiply_right_basis(bp, i));
            }
        }
        current = Subspace::span_of(n, rows);
        if (current.dim() == before) return current;
    }
}

}  // namespace detail

/// Smallest subspace containing the generators that is closed under left and
/// right multiplication and the antipode. The generators must be killed by
/// the counit; and the closure must come out a two-sided coideal, which holds
/// for every generating set the constructions here produce.
inline Subspace hopf_ideal_generated(const HopfAlgebra& h, const std::vector<Vec>& generators) {
    for (const Vec& g : generators)
        if (h.counit_of(g) != 0)
            throw PreconditionError("ideal generator is not killed by the counit");
    const Subspace closed =
        detail::close_subspace(h, Subspace::span_of(h.dim(), generators), true, true, true);
    if (!is_hopf_ideal(h, closed))
        throw PreconditionError("generated two-sided ideal is not a coideal");
    return closed;
}

/// A Hopf quotient H/I on the non-pivot coordinate basis, with the verified
/// projection morphism.
struct QuotientPresentation {
    HopfPtr source;
    Subspace ideal;
    HopfPtr algebra;
    Morphism projection;
};

inline QuotientPresentation quotient(const HopfPtr& h, const Subspace& ideal) {
    if (!is_hopf_ideal(*h, ideal)) throw PreconditionError("quotient by a non-Hopf ideal");
    const size_t n = h->dim();
    const Matrix proj = detail::quotient_projection(ideal);
    const size_t q = proj.rows();
    const auto reps = complement_coords(ideal);

    std::vector<Rational> mul(q * q * q), comul(q * q * q);
    Vec counit(q);
    Matrix antipode(q, q);
    for (size_t i = 0; i < q; ++i) {
        counit[i] = h->counit_row()[reps[i]];
        antipode.set_col(i, proj.apply(h->antipode_of(unit_vector(n, reps[i]))));
        for (size_t j = 0; j < q; ++j) {
            const Vec w = proj.apply(h->multiply_basis(reps[i], reps[j]));
            for (size_t k = 0; k < q; ++k) mul[(i * q + j) * q + k] = w[k];
        }
        for (const auto& t : h->comul_terms(reps[i])) {
            const Vec pl = proj.col(t.left), pr = proj.col(t.right);
            for (size_t x = 0; x < q; ++x) {
                if (pl[x] == 0) continue;
                for (size_t y = 0; y < q; ++y)
                    if (pr[y] != 0) comul[(i * q + x) * q + y] += t.coeff * pl[x] * pr[y];
            }
        }
    }
    std::vector<std::string> names(q);
    for (size_t i = 0; i < q; ++i) names[i] = "q" + std::to_string(i);
    auto algebra =
        std::make_shared<HopfAlgebra>(q, std::move(names), std::move(mul), std::move(comul),
                                      proj.apply(h->unit()), std::move(counit), std::move(antipode));
    if (!verify_hopf(*algebra).all())
        throw InvariantError("quotient by a Hopf ideal failed the Hopf axioms");
    return {h, ideal, algebra, Morphism(h, algebra, proj)};
}

/// Coequalizer of a parallel pair: the quotient of the codomain by the Hopf
/// ideal generated by the differences f(x) - g(x).
inline QuotientPresentation coequalizer(const Morphism& f, const Morphism& g) {
    detail::require_parallel(f, g);
    const Matrix diff = f.matrix() - g.matrix();
    std::vector<Vec> gens;
    for (size_t i = 0; i < diff.cols(); ++i) gens.push_back(diff.col(i));
    return quotient(f.cod(), hopf_ideal_generated(*f.cod(), gens));
}

/// Categorical cokernel: B modulo the Hopf ideal generated by the image of
/// the augmentation ideal of the domain.
inline QuotientPresentation hopf_cokernel(const Morphism& f) {
    const Subspace aug = augmentation_ideal(*f.dom());
    std::vector<Vec> gens;
    for (size_t p = 0; p < aug.dim(); ++p) gens.push_back(f.apply(aug.basis_vector(p)));
    return quotient(f.cod(), hopf_ideal_generated(*f.cod(), gens));
}

/// Epi-mono factorization through the linear image, which carries an induced
/// Hopf structure.
struct ImageFactorization {
    Morphism onto;   // X ->> image, surjective
    HopfPtr mid;     // the image with its induced structure
    Morphism into;   // image -> Y, injective
};

inline ImageFactorization image_factorization(const Morphism& f) {
    SubHopfPresentation sub = sub_hopf_algebra(f.cod(), f.linear_image(), "m");
    Matrix coords(sub.algebra->dim(), f.dom()->dim());
    for (size_t i = 0; i < f.dom()->dim(); ++i) {
        const auto c = sub.space.coordinates(f.apply_basis(i));
        if (!c) throw InvariantError("image factorization: column outside the linear image");
        coords.set_col(i, *c);
    }
    Morphism onto(f.dom(), sub.algebra, std::move(coords));
    if (sub.inclusion.matrix() * onto.matrix() != f.matrix())
        throw InvariantError("image factorization does not compose back to f");
    return {std::move(onto), sub.algebra, sub.inclusion};
}

/// The ideal cut out by the kernel pair of f: the span of
/// eps(x') x - eps(x) x' over x (x) x' in the pullback of f with itself.
/// The linear kernel of the factorization's epi leg must equal it.
inline Subspace kernel_pair_ideal(const Morphism& f) {
    const Pullback pb = pullback(f, f);
    const size_t n = f.dom()->dim();
    const Vec& eps = f.dom()->counit_row();
    std::vector<Vec> rows;
    for (size_t p = 0; p < pb.space.dim(); ++p) {
        const Vec w = pb.space.basis_vector(p);
        Vec r(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const Rational& c = w[i * n + j];
                if (c == 0) continue;
                r[i] += c * eps[j];
                r[j] -= c * eps[i];
            }
        rows.push_back(std::move(r));
    }
    return Subspace::span_of(n, rows);
}

}  // namespace hopfcat
