#include <gtest/gtest.h>

#include <irrspec/matrix.hpp>
#include <irrspec/text.hpp>

#include "oracles.hpp"

using namespace irrspec;

TEST(Charpoly, Examples) {
    const auto F3 = FieldCtx::create(3, 1);
    EXPECT_EQ(charpoly(Matrix(F3, 2)), Poly::from_ints(F3, {0, 0, 1}));
    EXPECT_EQ(charpoly(Matrix::identity(F3, 2)), Poly::from_ints(F3, {1, 1, 1}));
    EXPECT_EQ(charpoly(Matrix(F3, 0)), Poly::one(F3));
}

TEST(Charpoly, CompanionOfEveryMonicCubicOverF2) {
    const auto F2 = FieldCtx::create(2, 1);
    for (const auto& f : oracle::monic_polys(F2, 3)) {
        const auto c = Matrix::companion(f);
        EXPECT_EQ(charpoly(c), f);
        EXPECT_EQ(oracle::laplace_charpoly(c), f);
    }
}

TEST(Charpoly, MatchesLaplaceExpansion) {
    Rng rng(31);
    for (auto [p, k] : {std::pair{2ULL, 1u}, std::pair{3ULL, 1u}, std::pair{2ULL, 2u}, std::pair{7ULL, 1u}}) {
        const auto F = FieldCtx::create(p, k);
        for (std::size_t n = 1; n <= 5; ++n)
            for (int t = 0; t < 10; ++t) {
                Matrix m(F, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) m(i, j) = F.element(rng.uniform(F.q()));
                const auto cp = charpoly(m);
                EXPECT_EQ(cp, oracle::laplace_charpoly(m));
                EXPECT_TRUE(cp.is_monic());
                EXPECT_EQ(cp.degree(), static_cast<int>(n));
            }
    }
}

TEST(Determinant, SignConvention) {
    const auto F5 = FieldCtx::create(5, 1);
    const auto m = parse_matrix(F5, "1 2;3 4");
    EXPECT_EQ(determinant(m), F5.from_int(1 * 4 - 2 * 3));
    const auto m3 = parse_matrix(F5, "2 0 0;0 3 0;0 0 4");
    EXPECT_EQ(determinant(m3), F5.from_int(24));
}

TEST(Matrix, SymmetryAndProduct) {
    const auto F3 = FieldCtx::create(3, 1);
    const auto s = parse_matrix(F3, "1 2;2 0");
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_FALSE(parse_matrix(F3, "1 2;1 0").is_symmetric());
    EXPECT_EQ(s * Matrix::identity(F3, 2), s);
    EXPECT_EQ(s * s, parse_matrix(F3, "5 2;2 4"));
}
