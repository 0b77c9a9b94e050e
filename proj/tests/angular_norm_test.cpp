#include "jsr/angular_norm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"

namespace jsr {
namespace {

constexpr double kPi = std::numbers::pi;

AngularNorm sup_norm(std::size_t n) {
    return AngularNorm::sampled(n, [](double phi) { return std::max(std::abs(std::cos(phi)), std::abs(std::sin(phi))); });
}

AngularNorm constant(std::size_t n, double c) { return AngularNorm(std::vector<double>(n, c)); }

// A smooth non-Euclidean norm: the elliptic norm sqrt(x^2/4 + y^2) rotated by 0.3.
AngularNorm elliptic(std::size_t n) {
    return AngularNorm::sampled(n, [](double phi) {
        const double a = phi - 0.3;
        return std::sqrt(std::cos(a) * std::cos(a) / 4 + std::sin(a) * std::sin(a));
    });
}

// Node-by-node comparison; images pass through atan2 and hypot, so exact
// equality would depend on last-bit rounding.
void expect_profile_near(const AngularNorm& a, const AngularNorm& b, double tol = 1e-14) {
    ASSERT_EQ(a.node_count(), b.node_count());
    for (std::size_t j = 0; j < a.node_count(); ++j) ASSERT_NEAR(a[j], b[j], tol * b[j]) << "node " << j;
}

TEST(Euclidean, ConstantProfile) {
    for (std::size_t n : {8u, 3000u}) {
        const auto nm = euclidean(n);
        EXPECT_EQ(nm.node_count(), n);
        EXPECT_TRUE(std::all_of(nm.values().begin(), nm.values().end(), [](double v) { return v == 1.0; }));
    }
}

TEST(Euclidean, RejectsBadNodeCounts) {
    EXPECT_THROW((void)euclidean(7), std::invalid_argument);
    EXPECT_THROW((void)euclidean(6), std::invalid_argument);
    EXPECT_THROW(AngularNorm(std::vector<double>(9, 1.0)), std::invalid_argument);
}

TEST(AngularNormConstruction, RejectsNonPositiveValues) {
    std::vector<double> v(8, 1.0);
    v[3] = 0.0;
    EXPECT_THROW(AngularNorm{v}, std::invalid_argument);
    v[3] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(AngularNorm{v}, std::invalid_argument);
}

TEST(AngularNormConstruction, AntipodalNodesAveraged) {
    std::vector<double> v(8, 1.0);
    v[1] = 3.0;  // antipode is node 5
    const AngularNorm nm(v);
    EXPECT_EQ(nm[1], 2.0);
    EXPECT_EQ(nm[5], 2.0);
}

TEST(NodeGrid, AxesAreNodes) {
    EXPECT_EQ(AngularNorm::node_of(3000, {1, 0}), 1500u);
    EXPECT_EQ(AngularNorm::node_of(3000, {0, 1}), 2250u);
    EXPECT_EQ(AngularNorm::node_of(3000, {0, -2}), 750u);
    EXPECT_EQ(AngularNorm::node_of(3000, {-1, 0}), 0u);
    EXPECT_EQ(AngularNorm::node_of(3000, {1, 1}), 1875u);
    EXPECT_FALSE(AngularNorm::node_of(3000, {1, 0.3}).has_value());
    EXPECT_EQ(AngularNorm::node_direction(3000, 1500), (Vec2{1.0, 0.0}));
}

TEST(Eval, EuclideanAndZero) {
    EXPECT_DOUBLE_EQ(eval(euclidean(3000), {3, 4}), 5.0);
    EXPECT_EQ(eval(elliptic(64), {0, 0}), 0.0);
}

TEST(Eval, SupNormProfileAgainstExactSupNorm) {
    const std::size_t n = 3000;
    const auto nm = sup_norm(n);
    const double h = 2 * kPi / n;
    EXPECT_NEAR(eval(nm, {1, 1}), 1.0, h * h);
    double worst = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const double phi = -kPi + 2 * kPi * (k + 0.37) / 20000;
        const Vec2 x{2.5 * std::cos(phi), 2.5 * std::sin(phi)};
        worst = std::max(worst, std::abs(eval(nm, x) - std::max(std::abs(x[0]), std::abs(x[1]))) / 2.5);
    }
    EXPECT_LE(worst, h * h);
}

TEST(Eval, NodeValuesReproduced) {
    const auto nm = elliptic(360);
    for (std::size_t j = 0; j < 360; ++j) EXPECT_NEAR(nm(AngularNorm::node_direction(360, j)), nm[j], 1e-13);
}

TEST(Eval, HomogeneityAndSymmetry) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    const auto nm = elliptic(3000);
    for (int k = 0; k < 2000; ++k) {
        const Vec2 x{u(rng), u(rng)};
        const double c = u(rng);
        const double base = eval(nm, x);
        EXPECT_NEAR(eval(nm, {c * x[0], c * x[1]}), std::abs(c) * base, 1e-14 * std::abs(c) * base * 4);
        EXPECT_NEAR(eval(nm, {-x[0], -x[1]}), base, 1e-14 * base * 4);
    }
}

TEST(Eval, SampledTriangleInequality) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (std::size_t n : {64u, 3000u}) {
        const double slack = 10 * std::pow(2 * kPi / n, 2);
        for (const auto& nm : {euclidean(n), sup_norm(n), elliptic(n)}) {
            for (int k = 0; k < 5000; ++k) {
                const Vec2 x{u(rng), u(rng)};
                const Vec2 y{u(rng), u(rng)};
                const double nx = eval(nm, x);
                const double ny = eval(nm, y);
                EXPECT_LE(eval(nm, {x[0] + y[0], x[1] + y[1]}), nx + ny + slack * (nx + ny));
            }
        }
    }
}

TEST(MaxImage, Examples) {
    const auto nm = euclidean(3000);
    EXPECT_DOUBLE_EQ(max_image(nm, MatrixSet{Matrix::identity(2)}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(max_image(nm, MatrixSet{2.0 * Matrix::identity(2), Matrix::identity(2)}, {1, 0}), 2.0);
    // A1 (0,1) = (1,1), A2 (0,1) = (0,1)
    EXPECT_NEAR(max_image(nm, testing::example1(), {0, 1}), std::sqrt(2.0), 1e-15);
}

TEST(CombineLinear, FixedPoints) {
    const auto nm = euclidean(3000);
    expect_profile_near(combine_linear(nm, MatrixSet{Matrix::identity(2)}, 0.3, 1.0), nm);
    expect_profile_near(combine_linear(nm, MatrixSet{2.0 * Matrix::identity(2)}, 0.5, 2.0), nm);
}

TEST(CombineLinear, NormalizationIdentity) {
    const auto nm = euclidean(3000);
    const auto family = testing::example1();
    const double gamma = max_image(nm, family, {1, 0});
    EXPECT_NEAR(gamma, std::sqrt(2.0), 1e-15);
    const auto next = combine_linear(nm, family, 0.3, gamma);
    EXPECT_NEAR(eval(next, {1, 0}), 1.0, 1e-15);
}

TEST(CombineLinear, RejectsBadParameters) {
    const auto nm = euclidean(8);
    const MatrixSet s{Matrix::identity(2)};
    EXPECT_THROW((void)combine_linear(nm, s, 0.3, 0.0), std::invalid_argument);
    EXPECT_THROW((void)combine_linear(nm, s, 0.3, -1.0), std::invalid_argument);
    EXPECT_THROW((void)combine_linear(nm, s, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW((void)combine_linear(nm, s, 1.0, 1.0), std::invalid_argument);
}

TEST(CombineMax, Examples) {
    const auto nm = euclidean(3000);
    expect_profile_near(combine_max(nm, MatrixSet{Matrix::identity(2)}, 1.0), nm);
    expect_profile_near(combine_max(nm, MatrixSet{2.0 * Matrix::identity(2)}, 2.0), nm);
    expect_profile_near(combine_max(nm, MatrixSet{2.0 * Matrix::identity(2)}, 1.0), constant(3000, 2.0));
    EXPECT_THROW((void)combine_max(nm, MatrixSet{Matrix::identity(2)}, 0.0), std::invalid_argument);
}

TEST(Combinators, KeepProfilesPositiveAndSymmetric) {
    const auto family = testing::example1();
    auto nm = elliptic(1000);
    for (int k = 0; k < 5; ++k) {
        nm = combine_linear(nm, family, 0.4, 1.3);
        nm = combine_max(nm, family, 1.5);
        for (std::size_t j = 0; j < 500; ++j) {
            EXPECT_GT(nm[j], 0.0);
            EXPECT_EQ(nm[j], nm[j + 500]);
        }
    }
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(constant(3000, 2.0), {1, 0}), euclidean(3000));
    EXPECT_EQ(normalize(euclidean(3000), {0, 1}), euclidean(3000));
    for (double c : {0.25, 3.0, 7.7}) {
        for (const Vec2 e : {Vec2{1, 0}, Vec2{0, 1}, Vec2{0, -1}}) EXPECT_EQ(normalize(constant(64, c), e), euclidean(64));
    }
    EXPECT_THROW((void)normalize(euclidean(8), {0, 0}), std::invalid_argument);
}

TEST(Normalize, UnitAtReferenceVector) {
    const auto nm = elliptic(3000);
    EXPECT_EQ(eval(normalize(nm, {1, 0}), {1, 0}), 1.0);
    EXPECT_EQ(eval(normalize(nm, {0, 1}), {0, 1}), 1.0);
    EXPECT_NEAR(eval(normalize(nm, {0.3, -2.0}), {0.3, -2.0}), 1.0, 1e-14);
    EXPECT_NEAR(eval(normalize(nm, {2, 0}), {2, 0}), 1.0, 1e-14);
}

TEST(Eccentricity, Examples) {
    const auto nm = elliptic(3000);
    EXPECT_EQ(eccentricity(nm, nm), 1.0);
    EXPECT_NEAR(eccentricity(sup_norm(3000), euclidean(3000)), std::sqrt(2.0), 1e-6);
    std::vector<double> scaled(nm.values().begin(), nm.values().end());
    for (double& v : scaled) v *= 7;
    EXPECT_NEAR(eccentricity(AngularNorm(scaled), nm), 1.0, 1e-12);
    EXPECT_THROW((void)eccentricity(euclidean(8), euclidean(10)), std::invalid_argument);
}

TEST(Eccentricity, AtLeastOne) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int k = 0; k < 50; ++k) {
        std::vector<double> a(64), b(64);
        for (auto& v : a) v = u(rng);
        for (auto& v : b) v = u(rng);
        EXPECT_GE(eccentricity(AngularNorm(a), AngularNorm(b)), 1.0);
    }
}

}  // namespace
}  // namespace jsr
