#include "xygp/errors.hpp"
#include "xygp/xy_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace xygp {
namespace {

using std::numbers::pi;

TEST(XYModelTest, HamiltonianIsHermitianWithSpectrumPlusMinusOneAndR) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const XYParams p{u(rng), u(rng), 0.0};
        const Matrix h = build_h(p);
        ASSERT_TRUE(is_hermitian(h));
        const auto es = eig_hermitian(h);
        std::vector<double> expected{-1.0, 1.0, -p.r(), p.r()};
        std::sort(expected.begin(), expected.end());
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(es.values[k], expected[k], 1e-12);
    }
}

TEST(XYModelTest, RotatedFamilyMatchesConjugation) {
    const XYParams p{0.878, 0.5, 0.7};
    const Matrix conj = uz(p.phi).adjoint() * build_h(XYParams{p.lambda, p.gamma, 0.0}) * uz(p.phi);
    EXPECT_LT(max_abs_diff(build_h_tilde(p), conj), 1e-14);
}

TEST(XYModelTest, ThetaHandlesNegativeLambda) {
    EXPECT_NEAR((XYParams{-1.0, 1.0, 0.0}).theta(), 3.0 * pi / 4.0, 1e-15);
    EXPECT_NEAR((XYParams{0.0, 0.5, 0.0}).theta(), pi / 2.0, 1e-15);
}

TEST(XYModelTest, GroundStateInsideUnitSphereIsBell) {
    const auto gs = ground_state(XYParams{0.5, 0.5, 0.3});
    EXPECT_NEAR(gs.energy, -1.0, 1e-15);
    EXPECT_NEAR(std::abs(gs.state[1]), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(gs.state[2]), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(XYModelTest, GroundStateOutsideUnitSphereMatchesClosedForm) {
    const XYParams p{0.878, 0.5, 0.4};
    const auto gs = ground_state(p);
    EXPECT_NEAR(gs.energy, -p.r(), 1e-15);
    EXPECT_NEAR(gs.state[0].real(), std::cos(p.theta() / 2.0), 1e-15);
    const cplx expected = std::sin(p.theta() / 2.0) * std::polar(1.0, -2.0 * p.phi);
    EXPECT_NEAR(std::abs(gs.state[3] - expected), 0.0, 1e-15);
}

TEST(XYModelTest, GroundStateAgreesWithBruteForceEigensolve) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int trial = 0; trial < 100; ++trial) {
        const XYParams p{u(rng), u(rng), angle(rng)};
        if (std::abs(p.r() - 1.0) < 1e-3) continue;
        const Matrix h = build_h_tilde(p);
        const auto gs = ground_state(p);
        const auto es = eig_hermitian(h);
        EXPECT_NEAR(gs.energy, es.values[0], 1e-12);
        EXPECT_NEAR(std::abs(expectation(h, gs.state).real() - gs.energy), 0.0, 1e-12);
    }
}

TEST(XYModelTest, DegeneracyIsRejected) {
    const XYParams p{std::sqrt(0.75), 0.5, 0.0};
    EXPECT_FALSE(p.off_degeneracy());
    EXPECT_THROW(ground_state(p), DegeneracyError);
    EXPECT_NO_THROW(ground_state(XYParams{std::sqrt(0.75) + 1e-6, 0.5, 0.0}));
}

TEST(XYModelTest, UzIsDiagonalPhase) {
    const Matrix u = uz(0.3);
    EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, -0.3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(3, 3) - std::polar(1.0, 0.3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1) - 1.0), 0.0, 1e-15);
}

TEST(XYModelTest, FactorizationDiagonalizes) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const XYParams p{u(rng), u(rng), 0.0};
        const auto f = vd_hd_factorization(p);
        EXPECT_TRUE(is_unitary(f.v_d));
        EXPECT_LT(max_abs_diff(f.v_d * build_h(p) * f.v_d.adjoint(), f.h_d), 1e-12);
        const std::vector<double> diag{-p.r(), -1.0, 1.0, p.r()};
        EXPECT_LT(max_abs_diff(f.h_d, Matrix::diagonal(std::span<const double>(diag))), 1e-15);
    }
}

TEST(XYModelTest, FactorizationValidAtDegeneracy) {
    const XYParams p{std::sqrt(0.75), 0.5, 0.0};
    const auto f = vd_hd_factorization(p);
    EXPECT_LT(max_abs_diff(f.v_d * build_h(p) * f.v_d.adjoint(), f.h_d), 1e-12);
}

}  // namespace
}  // namespace xygp
