#include "jsr/matrix.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"

namespace jsr {
namespace {

using testing::example1;
using testing::random_matrix;

TEST(SpectralRadius, Identity) { EXPECT_DOUBLE_EQ(spectral_radius(Matrix::identity(2)), 1.0); }

TEST(SpectralRadius, ShearHasDoubleEigenvalueOne) { EXPECT_DOUBLE_EQ(spectral_radius(Matrix{{1, 1}, {0, 1}}), 1.0); }

TEST(SpectralRadius, RationalRotationLikeMatrix) {
    // det = (225 + 64) / 289 = 1 with a complex pair on the unit circle
    const Matrix a{{15.0 / 17, -16.0 / 17}, {4.0 / 17, 15.0 / 17}};
    EXPECT_NEAR(spectral_radius(a), 1.0, 1e-15);
}

TEST(SpectralRadius, RealDistinctEigenvalues) {
    EXPECT_DOUBLE_EQ(spectral_radius(Matrix{{2, 0}, {0, -3}}), 3.0);
    EXPECT_NEAR(spectral_radius(Matrix{{1, 2}, {3, 4}}), (5 + std::sqrt(33.0)) / 2, 1e-14);
}

TEST(SpectralRadius, RejectsLargerDimensions) {
    EXPECT_THROW((void)spectral_radius(Matrix::identity(3)), UnsupportedDimensionError);
}

TEST(SpectralRadius, HomogeneousAndTransposeInvariant) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> scale(-5.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        const Matrix a = random_matrix(rng);
        const double c = scale(rng);
        const double rho = spectral_radius(a);
        EXPECT_NEAR(spectral_radius(c * a), std::abs(c) * rho, 1e-12 * std::abs(c) * rho + 1e-300);
        EXPECT_NEAR(spectral_radius(a.transposed()), rho, 1e-12 * rho);
    }
}

TEST(Apply, Basics) {
    EXPECT_EQ(jsr::apply(Matrix::identity(2), Vec2{3, 4}), (Vec2{3, 4}));
    EXPECT_EQ(jsr::apply(Matrix{{1, 1}, {0, 1}}, Vec2{1, 1}), (Vec2{2, 1}));
    EXPECT_EQ(jsr::apply(Matrix{{0, 0}, {0, 0}}, Vec2{5, -2}), (Vec2{0, 0}));
}

TEST(Apply, DimensionMismatch) {
    const std::vector<double> x{1, 2, 3};
    EXPECT_THROW((void)jsr::apply(Matrix::identity(2), std::span<const double>(x)), std::invalid_argument);
    EXPECT_THROW((void)jsr::apply(Matrix::identity(3), Vec2{1, 2}), UnsupportedDimensionError);
}

TEST(MatrixConstruction, RejectsNonFiniteEntries) {
    EXPECT_THROW(Matrix(2, {1, 0, std::nan(""), 1}), std::invalid_argument);
    EXPECT_THROW(Matrix(2, {1, 0, 1}), std::invalid_argument);
    EXPECT_THROW((Matrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(MatrixSetConstruction, Invariants) {
    EXPECT_THROW(MatrixSet(std::vector<Matrix>{}), std::invalid_argument);
    EXPECT_THROW((MatrixSet{Matrix::identity(2), Matrix::identity(3)}), std::invalid_argument);
    EXPECT_THROW((MatrixSet{Matrix{{0, 0}, {0, 0}}}), std::invalid_argument);
    EXPECT_NO_THROW((MatrixSet{Matrix{{0, 0}, {0, 0}}, Matrix::identity(2)}));
}

TEST(Irreducibility, ScalarMatrixIsReducible) { EXPECT_FALSE(is_irreducible(MatrixSet{2.0 * Matrix::identity(2)})); }

TEST(Irreducibility, ShearPairIsIrreducible) {
    // eigendirections span(1,0) and span(0,1) do not coincide
    EXPECT_EQ(eigen_directions(Matrix{{1, 1}, {0, 1}}), std::vector<double>{0.0});
    const auto dirs = eigen_directions(Matrix{{1, 0}, {-1, 1}});
    ASSERT_EQ(dirs.size(), 1u);
    EXPECT_NEAR(dirs[0], std::numbers::pi / 2, 1e-15);
    EXPECT_TRUE(is_irreducible(example1()));
}

TEST(Irreducibility, DiagonalPairShareAxes) {
    EXPECT_FALSE(is_irreducible(MatrixSet{Matrix{{2, 0}, {0, 3}}, Matrix{{1, 0}, {0, 5}}}));
}

TEST(Irreducibility, ScalarMembersConstrainNothing) {
    EXPECT_FALSE(is_irreducible(MatrixSet{Matrix{{1, 1}, {0, 1}}, 3.0 * Matrix::identity(2)}));
    EXPECT_TRUE(is_irreducible(MatrixSet{Matrix::identity(2), Matrix::rotation(0.4)}));
}

TEST(Irreducibility, SingleMatrix) {
    EXPECT_TRUE(is_irreducible(MatrixSet{Matrix::rotation(std::numbers::pi / 5)}));
    EXPECT_FALSE(is_irreducible(MatrixSet{Matrix{{1, 2}, {3, 4}}}));
}

TEST(Irreducibility, SharedEigenvectorOffAxis) {
    // upper triangular pair: span(1,0) is invariant under both
    const Matrix t{{1, 1}, {-1, 1}};
    const MatrixSet upper{Matrix{{2, 1}, {0, 3}}, Matrix{{-1, 4}, {0, 0.5}}};
    EXPECT_FALSE(is_irreducible(upper));
    EXPECT_FALSE(is_irreducible(upper.similar(t)));
}

TEST(Irreducibility, InvariantUnderSimilarity) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::vector<MatrixSet> families{
        example1(),
        testing::example2(),
        MatrixSet{Matrix{{2, 0}, {0, 3}}, Matrix{{1, 0}, {0, 5}}},
        MatrixSet{Matrix{{2, 1}, {0, 3}}, Matrix{{-1, 4}, {0, 0.5}}},
        MatrixSet{Matrix{{1, 1}, {0, 1}}, 3.0 * Matrix::identity(2)},
    };
    for (int trial = 0; trial < 60; ++trial) {
        // near-identity T keeps cond(T) well below 10
        const Matrix t{{1 + 0.3 * u(rng), 0.3 * u(rng)}, {0.3 * u(rng), 1 + 0.3 * u(rng)}};
        const MatrixSet& s = families[static_cast<std::size_t>(trial) % families.size()];
        EXPECT_EQ(is_irreducible(s.similar(t)), is_irreducible(s)) << "family " << trial % families.size();
    }
    for (int k = 0; k < 100; ++k) {
        const MatrixSet s{random_matrix(rng), random_matrix(rng)};
        const Matrix t{{1 + 0.3 * u(rng), 0.3 * u(rng)}, {0.3 * u(rng), 1 + 0.3 * u(rng)}};
        EXPECT_EQ(is_irreducible(s.similar(t)), is_irreducible(s));
    }
}

TEST(Irreducibility, RejectsLargerDimensions) {
    EXPECT_THROW((void)is_irreducible(MatrixSet{Matrix::identity(3)}), UnsupportedDimensionError);
}

}  // namespace
}  // namespace jsr
