#include "generators.hpp"

#include <gtest/gtest.h>

using namespace ldb;

TEST(Scalar, ParsesAndPrintsCanonically) {
    EXPECT_EQ(Scalar::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Scalar::parse("-0").str(), "0");
    EXPECT_EQ(Scalar::parse("12").str(), "12");
    EXPECT_EQ(Scalar::parse("4/2"), Scalar(2));
    EXPECT_EQ(Scalar(3, 6).str(), "1/2");
}

TEST(Scalar, RejectsMalformedText) {
    EXPECT_THROW(Scalar::parse("1/0"), ParseError);
    EXPECT_THROW(Scalar::parse("abc"), ParseError);
    EXPECT_THROW(Scalar::parse(""), ParseError);
    EXPECT_THROW(Scalar::parse("1.5"), ParseError);
    EXPECT_THROW(Scalar::parse("6/-4"), ParseError);
}

TEST(Scalar, ExactArithmetic) {
    const Scalar third(1, 3);
    EXPECT_EQ(third + third + third, Scalar(1));
    EXPECT_EQ(Scalar(2, 3) * Scalar(3, 4), Scalar(1, 2));
    EXPECT_THROW(Scalar(1) / Scalar(0), std::domain_error);
    Scalar acc;
    acc.add_product(Scalar(1, 2), Scalar(4));
    EXPECT_EQ(acc, Scalar(2));
}

TEST(Scalar, StringRoundTripProperty) {
    testgen::Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Scalar s(rng.uniform(-50, 50), rng.uniform(1, 30));
        EXPECT_EQ(Scalar::parse(s.str()), s);
        EXPECT_EQ(Scalar::parse(s.str()).str(), s.str());
    }
}

TEST(SolveLinear, IdentityGivesUniqueSolution) {
    const Matrix b{{1}, {-2}, {Scalar(1, 3)}};
    const LinearSolution s = solve_linear(Matrix::identity(3), b);
    ASSERT_TRUE(s.consistent());
    EXPECT_EQ(*s.particular, b);
    EXPECT_TRUE(s.kernel.empty());
}

TEST(SolveLinear, ZeroSystemHasFullKernel) {
    const LinearSolution s = solve_linear(Matrix(2, 2), Matrix(2, 1));
    ASSERT_TRUE(s.consistent());
    EXPECT_TRUE(s.particular->is_zero());
    EXPECT_EQ(s.kernel.size(), 2u);
}

TEST(SolveLinear, DetectsInconsistency) {
    const LinearSolution s = solve_linear(Matrix{{1, 2}, {2, 4}}, Matrix{{1}, {3}});
    EXPECT_FALSE(s.consistent());
}

TEST(SolveLinear, ShapeMismatchThrows) { EXPECT_THROW(solve_linear(Matrix(2, 2), Matrix(3, 1)), ShapeError); }

TEST(Linalg, InverseAndKernelProperties) {
    testgen::Rng rng(2);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Matrix m = rng.invertible(n, 3);
        const auto inv = inverse(m);
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(m * *inv, Matrix::identity(n));
        EXPECT_EQ(*inv * m, Matrix::identity(n));
        EXPECT_EQ(det(m) * det(*inv), Scalar(1));

        const Matrix a = rng.matrix(n, n + 1, 2);
        const auto k = kernel(a);
        EXPECT_EQ(rank(a) + k.size(), n + 1);
        for (const Vec& v : k) EXPECT_TRUE(is_zero(a * v));
    }
    EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST(Linalg, DeterminantIsMultiplicative) {
    testgen::Rng rng(3);
    for (int it = 0; it < 40; ++it) {
        const Matrix a = rng.matrix(3, 3, 3), b = rng.matrix(3, 3, 3);
        EXPECT_EQ(det(a * b), det(a) * det(b));
    }
}

namespace {

BilinearOp random_op(testgen::Rng& rng, std::size_t n) {
    BilinearOp op(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) op(i, j, k) = rng.entry(2);
    return op;
}

// r placed in slots rs and s in slots ss with the shared slot multiplied, by direct index sums.
Tensor3 placed_by_hand(const BilinearOp& op, const Tensor2& r, const Tensor2& s, int r1, int r2, int s1, int s2) {
    const std::size_t n = r.dim();
    Tensor3 out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Scalar coef = r(a, b) * s(c, d);
                    if (coef.is_zero()) continue;
                    // slot contents: each slot gets a basis index or a product
                    std::array<int, 4> rslot{-1, -1, -1, -1}, sslot{-1, -1, -1, -1};
                    rslot[r1] = static_cast<int>(a);
                    rslot[r2] = static_cast<int>(b);
                    sslot[s1] = static_cast<int>(c);
                    sslot[s2] = static_cast<int>(d);
                    int shared = 0;
                    for (int t = 1; t <= 3; ++t)
                        if (rslot[t] >= 0 && sslot[t] >= 0) shared = t;
                    const Vec prod = op.basis_product(static_cast<std::size_t>(rslot[shared]),
                                                      static_cast<std::size_t>(sslot[shared]));
                    for (std::size_t k = 0; k < n; ++k) {
                        if (prod[k].is_zero()) continue;
                        std::array<std::size_t, 4> idx{};
                        for (int t = 1; t <= 3; ++t)
                            idx[t] = t == shared ? k : static_cast<std::size_t>(rslot[t] >= 0 ? rslot[t] : sslot[t]);
                        out(idx[1], idx[2], idx[3]) += coef * prod[k];
                    }
                }
    return out;
}

}  // namespace

TEST(PlaceProduct, CollisionProductVanishes) {
    BilinearOp op(2);
    op(0, 1, 0) = 5;  // e1 . e1 = 0
    const Tensor2 r = Tensor2::elementary(2, 0, 1);
    EXPECT_TRUE(place_product(op, r, r, {1, 2}, {1, 3}).is_zero());
}

TEST(PlaceProduct, SingleTermExpansion) {
    BilinearOp op(2);
    op(0, 0, 0) = 1;
    const Tensor2 r = Tensor2::elementary(2, 0, 0);
    Tensor3 want(2);
    want(0, 0, 0) = 1;
    EXPECT_EQ(place_product(op, r, r, {1, 2}, {1, 3}), want);
}

TEST(PlaceProduct, RejectsBadSlotPairs) {
    const BilinearOp op(2);
    const Tensor2 r(2);
    EXPECT_THROW(place_product(op, r, r, {1, 2}, {1, 2}), PlacementError);
    EXPECT_THROW(place_product(op, r, r, {1, 1}, {2, 3}), PlacementError);
    EXPECT_THROW(place_product(op, r, r, {1, 4}, {1, 3}), ShapeError);
    EXPECT_THROW(place_product(op, r, Tensor2(3), {1, 2}, {1, 3}), ShapeError);
}

TEST(PlaceProduct, MatchesIndexSumsProperty) {
    testgen::Rng rng(4);
    const std::vector<std::pair<Slots, Slots>> patterns = {
        {{1, 2}, {1, 3}}, {{1, 2}, {2, 3}}, {{2, 3}, {1, 3}}, {{1, 3}, {2, 3}}, {{1, 3}, {1, 2}},
        {{2, 1}, {1, 3}}, {{3, 1}, {2, 3}}, {{2, 3}, {1, 2}}, {{1, 2}, {3, 2}},
    };
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        const BilinearOp op = random_op(rng, n);
        const Tensor2 r = rng.tensor(n, 2), s = rng.tensor(n, 2);
        for (const auto& [rs, ss] : patterns)
            EXPECT_EQ(place_product(op, r, s, rs, ss), placed_by_hand(op, r, s, rs[0], rs[1], ss[0], ss[1]))
                << "slots (" << rs[0] << rs[1] << ") (" << ss[0] << ss[1] << ")";
    }
}

TEST(Tensor3, PermutationsActOnElementaryTensors) {
    Tensor3 t(3);
    t(0, 1, 2) = 1;  // e1 (x) e2 (x) e3
    auto single = [](const Tensor3& x, std::size_t i, std::size_t j, std::size_t k) {
        Tensor3 y(3);
        y(i, j, k) = 1;
        return x == y;
    };
    EXPECT_TRUE(single(t.sigma12(), 1, 0, 2));
    EXPECT_TRUE(single(t.sigma13(), 2, 1, 0));
    EXPECT_TRUE(single(t.sigma23(), 0, 2, 1));
    EXPECT_TRUE(single(t.sigma132(), 1, 2, 0));
}

TEST(Tensor3, PermutationGroupRelations) {
    testgen::Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        Tensor3 t(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = rng.entry(3);
        EXPECT_EQ(t.sigma12().sigma12(), t);
        EXPECT_EQ(t.sigma13().sigma13(), t);
        EXPECT_EQ(t.sigma132().sigma132().sigma132(), t);
        EXPECT_EQ(t.sigma23().sigma12(), t.sigma132().sigma132());
    }
}

TEST(Tensor2, FlipAndApply) {
    testgen::Rng rng(6);
    for (int it = 0; it < 20; ++it) {
        const Tensor2 r = rng.tensor(3, 2);
        const Matrix f = rng.matrix(3, 3, 2), g = rng.matrix(3, 3, 2);
        EXPECT_EQ(r.tau().tau(), r);
        EXPECT_EQ(r.apply(f, g).tau(), r.tau().apply(g, f));
        EXPECT_EQ(r.apply(f, g), r.apply_left(f).apply_right(g));
        EXPECT_TRUE((r - r.tau()).is_skew());
        EXPECT_TRUE((r + r.tau()).is_symmetric());
    }
}
