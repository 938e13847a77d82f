#include <catch2/catch_amalgamated.hpp>

#include "hopfcat/group.hpp"
#include "hopfcat/newman.hpp"

using namespace hopfcat;

TEST_CASE("tau of the trivial sub-Hopf algebra is the zero ideal") {
    const auto s3 = group_algebra(symmetric3());
    const Subspace trivial = Subspace::span_of(6, {s3->unit()});
    CHECK(tau(s3, trivial).space == Subspace::zero(6));
}

TEST_CASE("tau of the whole algebra is the augmentation ideal") {
    const auto s3 = group_algebra(symmetric3());
    const LeftIdealCoideal ideal = tau(s3, Subspace::full(6));
    CHECK(ideal.space == augmentation_ideal(*s3));
    CHECK(ideal.space.dim() == 5);
}

TEST_CASE("tau of k[A3] inside k[S3] has dimension four and misses the unit") {
    const auto s3 = group_algebra(symmetric3());
    const LeftIdealCoideal ideal = tau(s3, span_of_elements(s3, {0, 1, 2}));
    CHECK(ideal.space.dim() == 4);
    CHECK_FALSE(ideal.space.contains(s3->unit()));
}

TEST_CASE("tau rejects subspaces that are not sub-Hopf algebras") {
    const auto s3 = group_algebra(symmetric3());
    CHECK_THROWS_AS(tau(s3, span_of_elements(s3, {1})), PreconditionError);
}

TEST_CASE("left-ideal coideal invariants are enforced") {
    const auto s3 = group_algebra(symmetric3());
    // the span of a single reflection is not a left ideal
    CHECK_THROWS_AS(make_left_ideal_coideal(s3, span_of_elements(s3, {3})), PreconditionError);
    // the augmentation ideal qualifies
    CHECK_NOTHROW(make_left_ideal_coideal(s3, augmentation_ideal(*s3)));
}

TEST_CASE("sigma of the zero ideal is the trivial sub-Hopf algebra") {
    const auto s3 = group_algebra(symmetric3());
    const Subspace back = sigma(make_left_ideal_coideal(s3, Subspace::zero(6)));
    CHECK(back == Subspace::span_of(6, {s3->unit()}));
}

TEST_CASE("sigma of the augmentation ideal is everything") {
    const auto s3 = group_algebra(symmetric3());
    CHECK(sigma(make_left_ideal_coideal(s3, augmentation_ideal(*s3))) == Subspace::full(6));
}

TEST_CASE("sigma undoes tau on k[A3]") {
    const auto s3 = group_algebra(symmetric3());
    const Subspace a3 = span_of_elements(s3, {0, 1, 2});
    CHECK(sigma(tau(s3, a3)) == a3);
}

TEST_CASE("Newman roundtrip over every subgroup algebra of S3, D4 and Q8") {
    for (const GroupTable& g : {symmetric3(), dihedral_group(4), quaternion_group()}) {
        const auto h = group_algebra(g);
        for (const auto& sub : subgroups(g)) {
            INFO(g.name() << " subgroup of order " << sub.size());
            const Subspace span = span_of_elements(h, sub);
            CHECK(verify_newman_roundtrip(h, span));
            // and tau . sigma fixes the produced ideals
            const LeftIdealCoideal ideal = tau(h, span);
            CHECK(tau(h, sigma(ideal)).space == ideal.space);
        }
    }
}

TEST_CASE("normal-kernel lemma on k[A3] in k[S3]") {
    const auto s3 = group_algebra(symmetric3());
    const Subspace a3 = span_of_elements(s3, {0, 1, 2});
    CHECK(verify_normal_kernel_lemma(s3, a3));
    // the two-sided and left ideals agree, both of dimension four
    CHECK(tau(s3, a3).space.dim() == 4);
}

TEST_CASE("normal-kernel lemma across all subgroups of a commutative algebra") {
    const auto c6t = cyclic_group(6);
    const auto c6 = group_algebra(c6t);
    for (const auto& sub : subgroups(c6t)) CHECK(verify_normal_kernel_lemma(c6, span_of_elements(c6, sub)));
}

TEST_CASE("normal-kernel lemma with the whole algebra recovers everything") {
    const auto c4 = group_algebra(cyclic_group(4));
    CHECK(verify_normal_kernel_lemma(c4, Subspace::full(4)));
}

TEST_CASE("normal-kernel lemma refuses non-normal sub-Hopf algebras") {
    const auto s3 = group_algebra(symmetric3());
    CHECK_THROWS_AS(verify_normal_kernel_lemma(s3, span_of_elements(s3, {0, 3})), PreconditionError);
}

TEST_CASE("for normal subgroups the Newman ideal matches the cokernel ideal") {
    const auto s3 = group_algebra(symmetric3());
    const auto c3 = group_algebra(cyclic_group(3));
    const Morphism incl = group_hom_morphism(c3, s3, {0, 1, 2});
    const QuotientPresentation coker = hopf_cokernel(incl);
    CHECK(coker.ideal == tau(s3, span_of_elements(s3, {0, 1, 2})).space);
}

TEST_CASE("sigma agrees between the coalgebra quotient and the Hopf quotient for Hopf ideals") {
    const auto s3 = group_algebra(symmetric3());
    const Subspace a3 = span_of_elements(s3, {0, 1, 2});
    const LeftIdealCoideal ideal = tau(s3, a3);
    REQUIRE(is_hopf_ideal(*s3, ideal.space));
    const QuotientPresentation q = quotient(s3, ideal.space);
    CHECK(sigma(ideal) == hopf_kernel(q.projection).space);
}
