#include "generators.hpp"
#include "oracle.hpp"

#include "ldb/catalog.hpp"

#include <gtest/gtest.h>

using namespace ldb;

namespace {

Tensor2 to_tensor(const oracle::QMat& m) {
    Tensor2 t(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t(i, j) = Scalar::parse(m[i][j].get_str());
    return t;
}

std::vector<DendAlgebra> hosts(testgen::Rng& rng) {
    return {testgen::typed_abelian_circ_2d(), testgen::typed_affine_2d(), testgen::affine_semidirect_4d(), rng.valid_algebra(3)};
}

}  // namespace

TEST(Cobound, MatchesOracleProperty) {
    testgen::Rng rng(40);
    for (const DendAlgebra& a : hosts(rng))
        for (int it = 0; it < 10; ++it) {
            const Tensor2 r = rng.tensor(a.dim(), 2);
            const CoProduct c = cobound(a, r);
            for (std::size_t x = 0; x < a.dim(); ++x) {
                const oracle::CoboundValue v =
                    oracle::cobound_at(oracle::from(a.succ), oracle::from(a.prec), oracle::from(r.coeff()), x);
                EXPECT_EQ(c.dsucc[x], to_tensor(v.succ));
                EXPECT_EQ(c.dprec[x], to_tensor(v.prec));
            }
        }
}

TEST(Cobound, WorkedSkewSolutionValues) {
    const DendAlgebra s = testgen::affine_semidirect_4d();
    for (int t : {1, 2, -3}) {
        const CoProduct c = cobound(s, testgen::affine_skew_solution(t));
        EXPECT_EQ(c.dsucc[0], Tensor2::elementary(4, 2, 1, -t));
        // the valid semidirect table gives -t and t here
        EXPECT_EQ(c.dsucc[3], Tensor2::elementary(4, 2, 2, -t));
        EXPECT_EQ(c.dprec[3], Tensor2::elementary(4, 2, 2, t));
        EXPECT_TRUE(c.dprec[0].is_zero());
        EXPECT_TRUE(c.dsucc[1].is_zero() && c.dprec[1].is_zero());
        EXPECT_TRUE(c.dsucc[2].is_zero() && c.dprec[2].is_zero());
        EXPECT_TRUE(bialgebra_full_report({s, c}).ok());
    }
}

TEST(Cobound, CompatibilityHoldsForEveryTensorProperty) {
    testgen::Rng rng(41);
    for (const DendAlgebra& a : hosts(rng))
        for (int it = 0; it < 15; ++it) {
            const Tensor2 r = rng.uniform(0, 1) ? rng.skew(a.dim(), 2) : rng.tensor(a.dim(), 2);
            const Report rep = check_bialgebra({a, cobound(a, r)});
            for (const char* id : {"B4", "B5", "B6"}) EXPECT_FALSE(rep.has(id)) << id;
        }
}

TEST(Cobound, SkewBialgebraIffSolutionProperty) {
    testgen::Rng rng(42);
    int yes = 0, no = 0;
    for (const DendAlgebra& a : hosts(rng))
        for (int it = 0; it < 25; ++it) {
            const Tensor2 r = rng.skew(a.dim(), 2);
            const bool bialg = bialgebra_full_report({a, cobound(a, r)}).ok();
            EXPECT_EQ(bialg, check_ldybe(a, r));
            (bialg ? yes : no)++;
        }
    EXPECT_GT(yes, 0);
    EXPECT_GT(no, 0);
}

TEST(Coalgebra, DualizeAndZero) {
    EXPECT_TRUE(check_coalgebra(CoProduct(3)).ok());
    const CoProduct c = cobound(testgen::affine_semidirect_4d(), testgen::affine_skew_solution(1));
    EXPECT_TRUE(check_ld(dualize(c)).ok());
    CoProduct bad(2);
    bad.dsucc[0] = Tensor2::elementary(2, 0, 0);
    bad.dprec[0] = Tensor2::elementary(2, 1, 1);
    EXPECT_EQ(check_coalgebra(bad).ok(), check_ld(dualize(bad)).ok());
}

TEST(Classify, Tags) {
    const DendAlgebra s = testgen::affine_semidirect_4d();
    EXPECT_EQ(classify_r(s, testgen::affine_skew_solution(1)).tag, RClassTag::Triangular);
    EXPECT_EQ(classify_r(testgen::typed_affine_2d(), Tensor2::elementary(2, 0, 0)).tag, RClassTag::NotSolution);
    EXPECT_EQ(to_string(RClassTag::QuasiTriangular), "QuasiTriangular");
    const CanonicalR cr = canonical_r({testgen::typed_affine_2d(), CoProduct(2)});
    EXPECT_EQ(cr.cls.tag, RClassTag::Factorizable);
    EXPECT_TRUE(cr.cls.kernel.empty());
}

TEST(Classify, InvariantSymmetricPartsKeepTagConsistent) {
    const DendAlgebra a = testgen::affine_semidirect_4d();
    for (const Tensor2& s : testgen::invariant_symmetric_space(a)) {
        const Tensor2 r = testgen::affine_skew_solution(1) + s;
        const RClass c = classify_r(a, r);
        EXPECT_TRUE(c.invariance.ok());
        EXPECT_EQ(c.tag == RClassTag::NotSolution, !check_ldybe(a, r));
        if (c.tag == RClassTag::QuasiTriangular) EXPECT_FALSE(c.kernel.empty());
        if (c.tag == RClassTag::Factorizable) EXPECT_TRUE(c.kernel.empty());
    }
}

TEST(CanonicalR, ZeroCoproductDoublesProperty) {
    testgen::Rng rng(44);
    for (int it = 0; it < 6; ++it) {
        const DendAlgebra a = it < 2 ? (it ? testgen::typed_abelian_circ_2d() : testgen::typed_affine_2d()) : rng.valid_algebra(2);
        const CanonicalR cr = canonical_r({a, CoProduct(2)});
        EXPECT_EQ(cr.cls.tag, RClassTag::Factorizable);
        EXPECT_TRUE(ldybe_tensor(cr.d, cr.r).is_zero());
        EXPECT_EQ(cr.d, semidirect(a, dual_rep(regular_rep(a))));
    }
}

TEST(CanonicalR, CoboundaryDouble) {
    const DendAlgebra s = testgen::affine_semidirect_4d();
    const Bialgebra b{s, cobound(s, testgen::affine_skew_solution(1))};
    const CanonicalR cr = canonical_r(b);
    EXPECT_EQ(cr.d.dim(), 8u);
    EXPECT_TRUE(check_ld(cr.d).ok());
    EXPECT_EQ(cr.cls.tag, RClassTag::Factorizable);
    EXPECT_TRUE(phase_space_check(cr.d, pairing_form(4)));
}

TEST(PhiIso, BijectiveHomomorphism) {
    for (const DendAlgebra& a : {testgen::typed_abelian_circ_2d(), testgen::typed_affine_2d()}) {
        const CanonicalR cr = canonical_r({a, CoProduct(2)});
        const PhiIso p = phi_iso(cr.d, cr.r);
        EXPECT_TRUE(p.bijective);
        EXPECT_TRUE(p.hom.ok());
        EXPECT_TRUE(check_hom(p.phi, p.source, p.target).ok());
        EXPECT_EQ(p.target, direct_sum(cr.d, cr.d));
    }
    EXPECT_THROW(phi_iso(testgen::affine_semidirect_4d(), testgen::affine_skew_solution(1)), ContractError);
}

TEST(DualMult, HomomorphismsFromFactorizable) {
    const CanonicalR cr = canonical_r({testgen::typed_affine_2d(), CoProduct(2)});
    const DendAlgebra dual = dual_mult_from_r(cr.d, cr.r);
    EXPECT_TRUE(check_ld(dual).ok());
    EXPECT_TRUE(check_hom(t_map(cr.r), dual, cr.d).ok());
    EXPECT_TRUE(check_hom(-t_map(cr.r.tau()), dual, cr.d).ok());
}

TEST(Double, ManinAndQuadratic) {
    const DendAlgebra s = testgen::affine_semidirect_4d();
    const Bialgebra b{s, cobound(s, testgen::affine_skew_solution(2))};
    const DendAlgebra d = double_of(b);
    const BilForm w = pairing_form(4);
    Matrix span_a(8, 4), span_b(8, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        span_a(i, i) = 1;
        span_b(4 + i, i) = 1;
    }
    EXPECT_TRUE(check_quadratic_ld(d, w));
    EXPECT_TRUE(manin_triple_check(d, w, span_a, span_b));
    EXPECT_TRUE(phase_space_check(associated(d), w));
    EXPECT_THROW(manin_triple_check(d, w, span_a, span_a), ContractError);
}

TEST(Double, InvalidCoproductIsRejected) {
    CoProduct bad(2);
    bad.dsucc[0] = Tensor2::elementary(2, 0, 0);
    bad.dprec[0] = Tensor2::elementary(2, 1, 1);
    if (!check_ld(dualize(bad)).ok()) EXPECT_THROW(double_matched_pair({testgen::typed_affine_2d(), bad}), ContractError);
}
