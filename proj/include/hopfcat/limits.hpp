#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfcat/hopf.hpp"

namespace hopfcat {

/// A sub-Hopf algebra presented on the canonical basis of its subspace,
/// with the Hopf structure re-expressed in that basis and the verified
/// inclusion morphism.
struct SubHopfPresentation {
    Subspace space;
    HopfPtr algebra;
    Morphism inclusion;
};

/// Restricts the structure maps of h to the subspace s. The subspace must
/// be closed under multiplication, comultiplication, unit and antipode;
/// failure to close means the caller's construction is wrong, not the
/// input, so it raises InvariantError.
inline SubHopfPresentation sub_hopf_algebra(const HopfPtr& h, const Subspace& s,
                                            const std::string& name_prefix = "s") {
    const size_t n = h->dim(), d = s.dim();
    if (s.ambient_dim() != n) throw PreconditionError("subspace ambient dim != algebra dim");
    const auto closure_failure = [&](const char* what) {
        return InvariantError(std::string("subspace is not closed under ") + what);
    };

    if (s.is_coordinate()) {
        // Basis vectors are standard coordinates, so structure constants
        // restrict by index translation alone.
        std::vector<size_t> slot(n, n);
        for (size_t p = 0; p < d; ++p) slot[s.pivot_cols()[p]] = p;
        const auto translate = [&](size_t ambient_index, const char* what) {
            if (slot[ambient_index] == n) throw closure_failure(what);
            return slot[ambient_index];
        };
        std::vector<Rational> mul(d * d * d), comul(d * d * d);
        Vec unit_c(d), counit(d);
        Matrix antipode(d, d);
        for (size_t i = 0; i < n; ++i)
            if (h->unit()[i] != 0) unit_c[translate(i, "the unit")] = h->unit()[i];
        for (size_t p = 0; p < d; ++p) {
            const size_t pi = s.pivot_cols()[p];
            counit[p] = h->counit_row()[pi];
            for (size_t r = 0; r < n; ++r) {
                const Rational& v = h->antipode()(r, pi);
                if (v != 0) antipode(translate(r, "the antipode"), p) = v;
            }
            for (size_t q = 0; q < d; ++q)
                for (const auto& [k, c] : h->mul_terms(pi, s.pivot_cols()[q]))
                    mul[(p * d + q) * d + translate(k, "multiplication")] = c;
            for (const auto& t : h->comul_terms(pi))
                comul[(p * d + translate(t.left, "comultiplication")) * d +
                      translate(t.right, "comultiplication")] = t.coeff;
        }
        std::vector<std::string> names(d);
        for (size_t p = 0; p < d; ++p) names[p] = name_prefix + std::to_string(p);
        auto algebra = std::make_shared<HopfAlgebra>(d, std::move(names), std::move(mul),
                                                     std::move(comul), std::move(unit_c),
                                                     std::move(counit), std::move(antipode));
        Matrix incl(n, d);
        for (size_t p = 0; p < d; ++p) incl(s.pivot_cols()[p], p) = 1;
        return {s, algebra, Morphism(algebra, h, std::move(incl))};
    }

    const auto unit_coords = s.coordinates(h->unit());
    if (!unit_coords) throw closure_failure("the unit");

    std::vector<Rational> mul(d * d * d), comul(d * d * d);
    Vec counit(d);
    Matrix antipode(d, d);
    for (size_t p = 0; p < d; ++p) {
        const Vec bp = s.basis_vector(p);
        counit[p] = h->counit_of(bp);
        const auto s_coords = s.coordinates(h->antipode_of(bp));
        if (!s_coords) throw closure_failure("the antipode");
        antipode.set_col(p, *s_coords);
        for (size_t q = 0; q < d; ++q) {
            const auto prod = s.coordinates(h->multiply(bp, s.basis_vector(q)));
            if (!prod) throw closure_failure("multiplication");
            for (size_t k = 0; k < d; ++k) mul[(p * d + q) * d + k] = (*prod)[k];
        }
        // Coefficients on b_i (x) b_j are read off the pivot positions, then
        // checked by exact reconstruction.
        const Vec w = h->comultiply(bp);
        std::map<size_t, Rational> residual;
        for (size_t idx = 0; idx < w.size(); ++idx)
            if (w[idx] != 0) residual[idx] = w[idx];
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                const Rational alpha = w[s.pivot_cols()[i] * n + s.pivot_cols()[j]];
                if (alpha == 0) continue;
                comul[(p * d + i) * d + j] = alpha;
                const Vec bi = s.basis_vector(i), bj = s.basis_vector(j);
                for (size_t x = 0; x < n; ++x) {
                    if (bi[x] == 0) continue;
                    for (size_t y = 0; y < n; ++y) {
                        if (bj[y] == 0) continue;
                        auto& entry = residual[x * n + y];
                        entry -= alpha * bi[x] * bj[y];
                        if (entry == 0) residual.erase(x * n + y);
                    }
                }
            }
        if (!residual.empty()) throw closure_failure("comultiplication");
    }

    std::vector<std::string> names(d);
    for (size_t p = 0; p < d; ++p) names[p] = name_prefix + std::to_string(p);
    auto algebra = std::make_shared<HopfAlgebra>(d, std::move(names), std::move(mul),
                                                 std::move(comul), *unit_coords, std::move(counit),
                                                 std::move(antipode));
    Matrix incl(n, d);
    for (size_t p = 0; p < d; ++p) incl.set_col(p, s.basis_vector(p));
    return {s, algebra, Morphism(algebra, h, std::move(incl))};
}

namespace detail {
inline void require_parallel(const Morphism& f, const Morphism& g) {
    if (!same_object(f.dom(), g.dom()) || !same_object(f.cod(), g.cod()))
        throw PreconditionError("expected a parallel pair of morphisms");
}
}  // namespace detail

/// Solution space of f(x_1) (x) x_2 = g(x_1) (x) x_2 (or, mirrored, of
/// x_1 (x) f(x_2) = x_1 (x) g(x_2); the two agree by cocommutativity).
inline Subspace equalizer_space(const Morphism& f, const Morphism& g, bool mirrored = false) {
    detail::require_parallel(f, g);
    const HopfAlgebra& a = *f.dom();
    const size_t na = a.dim(), nb = f.cod()->dim();
    const Matrix diff = f.matrix() - g.matrix();
    Matrix system(nb * na, na);
    for (size_t i = 0; i < na; ++i)
        for (const auto& t : a.comul_terms(i)) {
            const size_t through = mirrored ? t.right : t.left;
            const size_t along = mirrored ? t.left : t.right;
            for (size_t r = 0; r < nb; ++r)
                if (diff(r, through) != 0) system(r * na + along, i) += t.coeff * diff(r, through);
        }
    return kernel_space(system);
}

/// Equalizer of a parallel pair: the largest sub-Hopf algebra on which the
/// two morphisms agree weakly, with its inclusion.
inline SubHopfPresentation equalizer(const Morphism& f, const Morphism& g) {
    return sub_hopf_algebra(f.dom(), equalizer_space(f, g), "e");
}

/// The trivial morphism eta_cod . eps_dom through the ground field.
inline Morphism trivial_morphism(const HopfPtr& dom, const HopfPtr& cod) {
    Matrix m(cod->dim(), dom->dim());
    for (size_t i = 0; i < cod->dim(); ++i)
        for (size_t j = 0; j < dom->dim(); ++j) m(i, j) = cod->unit()[i] * dom->counit_row()[j];
    return Morphism(dom, cod, std::move(m));
}

/// Categorical kernel: the equalizer of f with the trivial morphism, cut
/// out by x_1 (x) f(x_2) = x (x) 1. The result is checked to be a normal
/// sub-Hopf algebra, which the theory guarantees for every Hopf morphism.
inline SubHopfPresentation hopf_kernel(const Morphism& f) {
    auto k = sub_hopf_algebra(
        f.dom(), equalizer_space(f, trivial_morphism(f.dom(), f.cod()), /*mirrored=*/true), "k");
    if (!is_normal_sub_hopf(*f.dom(), k.space))
        throw InvariantError("Hopf kernel is not a normal sub-Hopf algebra");
    return k;
}

/// A finite-limit cone: apex, projection legs, and a builder that produces
/// the unique mediating morphism for a matching pair of legs.
struct LimitCone {
    HopfPtr apex;
    std::vector<Morphism> legs;
    std::function<Morphism(const Morphism&, const Morphism&)> mediate;
};

/// The tensor-product Hopf algebra A (x) B. Basis index (i,j) flattens to
/// i * dim(B) + j; comultiplication uses the middle swap.
inline HopfPtr tensor_hopf(const HopfPtr& a, const HopfPtr& b) {
    const size_t na = a->dim(), nb = b->dim(), n = na * nb;
    std::vector<std::string> names(n);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            names[i * nb + j] = a->basis_names()[i] + "*" + b->basis_names()[j];
    std::vector<Rational> mul(n * n * n), comul(n * n * n);
    for (size_t i1 = 0; i1 < na; ++i1)
        for (size_t j1 = 0; j1 < nb; ++j1) {
            const size_t row = i1 * nb + j1;
            for (size_t i2 = 0; i2 < na; ++i2)
                for (size_t j2 = 0; j2 < nb; ++j2) {
                    const size_t colv = i2 * nb + j2;
                    for (const auto& [k, c] : a->mul_terms(i1, i2))
                        for (const auto& [l, d] : b->mul_terms(j1, j2))
                            mul[(row * n + colv) * n + (k * nb + l)] = c * d;
                }
            for (const auto& ta : a->comul_terms(i1))
                for (const auto& tb : b->comul_terms(j1))
                    comul[(row * n + (ta.left * nb + tb.left)) * n + (ta.right * nb + tb.right)] =
                        ta.coeff * tb.coeff;
        }
    Vec unit = kron_vec(a->unit(), b->unit());
    Vec counit(n);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            counit[i * nb + j] = a->counit_row()[i] * b->counit_row()[j];
    Matrix antipode = kron(a->antipode(), b->antipode());
    return std::make_shared<HopfAlgebra>(n, std::move(names), std::move(mul), std::move(comul),
                                         std::move(unit), std::move(counit), std::move(antipode));
}

namespace detail {

inline Matrix tensor_leg_matrix(const HopfPtr& a, const HopfPtr& b, bool left) {
    const size_t na = a->dim(), nb = b->dim();
    Matrix m(left ? na : nb, na * nb);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            m(left ? i : j, i * nb + j) = left ? b->counit_row()[j] : a->counit_row()[i];
    return m;
}

/// phi(x) = f(x_1) (x) g(x_2) as a matrix into A (x) B.
inline Matrix pairing_matrix(const Morphism& f, const Morphism& g) {
    const size_t nh = f.dom()->dim(), na = f.cod()->dim(), nb = g.cod()->dim();
    Matrix m(na * nb, nh);
    for (size_t x = 0; x < nh; ++x)
        for (const auto& t : f.dom()->comul_terms(x)) {
            const Vec fc = f.apply_basis(t.left), gc = g.apply_basis(t.right);
            for (size_t r = 0; r < na; ++r) {
                if (fc[r] == 0) continue;
                for (size_t s = 0; s < nb; ++s)
                    if (gc[s] != 0) m(r * nb + s, x) += t.coeff * fc[r] * gc[s];
            }
        }
    return m;
}

}  // namespace detail

/// Binary product: apex A (x) B with legs pi_A(a (x) b) = eps(b) a and
/// pi_B(a (x) b) = eps(a) b. The mediator of (f, g) is x -> f(x_1) (x) g(x_2);
/// it is verified against both legs, and is the unique morphism with those
/// composites because (pi_A (x) pi_B) . Delta is the identity on the apex.
inline LimitCone product(const HopfPtr& a, const HopfPtr& b) {
    HopfPtr apex = tensor_hopf(a, b);
    Morphism pa(apex, a, detail::tensor_leg_matrix(a, b, true));
    Morphism pb(apex, b, detail::tensor_leg_matrix(a, b, false));
    auto mediate = [apex, pa, pb, a, b](const Morphism& f, const Morphism& g) -> Morphism {
        if (!same_object(f.dom(), g.dom())) throw PreconditionError("mediator legs have different domains");
        if (!same_object(f.cod(), a) || !same_object(g.cod(), b))
            throw PreconditionError("mediator legs do not match the product factors");
        Morphism phi(f.dom(), apex, detail::pairing_matrix(f, g));
        if (pa.matrix() * phi.matrix() != f.matrix() || pb.matrix() * phi.matrix() != g.matrix())
            throw InvariantError("product mediator does not reproduce its legs");
        return phi;
    };
    return {apex, {pa, pb}, std::move(mediate)};
}

/// A pullback cone, together with how its apex sits inside A (x) B.
struct Pullback {
    LimitCone cone;
    HopfPtr ambient;        // the product A (x) B
    Subspace space;         // apex as a subspace of the ambient product
    Morphism inclusion;     // apex -> ambient
};

/// The pullback of f: A -> C and g: B -> C as a subspace of A (x) B: the
/// solution space of a_1 (x) f(a_2) (x) b = a (x) g(b_1) (x) b_2.
inline Subspace pullback_space(const Morphism& f, const Morphism& g) {
    if (!same_object(f.cod(), g.cod())) throw PreconditionError("pullback legs must share a codomain");
    const HopfPtr a = f.dom(), b = g.dom();
    const size_t na = a->dim(), nb = b->dim(), nc = f.cod()->dim();
    Matrix system(na * nc * nb, na * nb);
    for (size_t x = 0; x < na; ++x)
        for (size_t y = 0; y < nb; ++y) {
            const size_t colv = x * nb + y;
            for (const auto& t : a->comul_terms(x)) {
                const Vec fq = f.apply_basis(t.right);
                for (size_t r = 0; r < nc; ++r)
                    if (fq[r] != 0) system((t.left * nc + r) * nb + y, colv) += t.coeff * fq[r];
            }
            for (const auto& t : b->comul_terms(y)) {
                const Vec gu = g.apply_basis(t.left);
                for (size_t r = 0; r < nc; ++r)
                    if (gu[r] != 0) system((x * nc + r) * nb + t.right, colv) -= t.coeff * gu[r];
            }
        }
    return kernel_space(system);
}

/// Pullback cone with the full induced Hopf structure on the apex.
inline Pullback pullback(const Morphism& f, const Morphism& g) {
    const HopfPtr a = f.dom(), b = g.dom();
    const Subspace space = pullback_space(f, g);
    LimitCone prod = product(a, b);
    SubHopfPresentation sub = sub_hopf_algebra(prod.apex, space, "p");
    Morphism leg_a = compose(prod.legs[0], sub.inclusion);
    Morphism leg_b = compose(prod.legs[1], sub.inclusion);
    const HopfPtr apex = sub.algebra;
    auto mediate = [f, g, apex, space, leg_a, leg_b](const Morphism& phi,
                                                     const Morphism& gamma) -> Morphism {
        if (!same_object(phi.dom(), gamma.dom()))
            throw PreconditionError("mediator legs have different domains");
        if (!same_object(phi.cod(), f.dom()) || !same_object(gamma.cod(), g.dom()))
            throw PreconditionError("mediator legs do not match the pullback feet");
        if (f.matrix() * phi.matrix() != g.matrix() * gamma.matrix())
            throw PreconditionError("mediator legs do not commute over the cospan");
        const Matrix into_product = detail::pairing_matrix(phi, gamma);
        Matrix coords(apex->dim(), phi.dom()->dim());
        for (size_t x = 0; x < phi.dom()->dim(); ++x) {
            const auto c = space.coordinates(into_product.col(x));
            if (!c) throw InvariantError("pullback mediator does not land in the apex");
            coords.set_col(x, *c);
        }
        Morphism mediator(phi.dom(), apex, std::move(coords));
        if (leg_a.matrix() * mediator.matrix() != phi.matrix() ||
            leg_b.matrix() * mediator.matrix() != gamma.matrix())
            throw InvariantError("pullback mediator does not reproduce its legs");
        return mediator;
    };
    return {{apex, {leg_a, leg_b}, std::move(mediate)}, prod.apex, sub.space, sub.inclusion};
}

}  // namespace hopfcat
