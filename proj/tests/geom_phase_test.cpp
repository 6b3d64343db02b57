#include "xygp/errors.hpp"
#include "xygp/geom_phase.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace xygp {
namespace {

using std::numbers::pi;

constexpr double kDeg = pi / 180.0;

TEST(GeomPhaseTest, AnalyticMatchesClosedForm) {
    EXPECT_NEAR(gp_analytic(XYParams{0.878, 0.5, 0.0}) / kDeg, 23.5848, 1e-3);
    EXPECT_NEAR(gp_analytic(XYParams{1.7321, 0.5, 0.0}) / kDeg, 7.06122, 1e-4);
    EXPECT_EQ(gp_analytic(XYParams{0.327, 0.5, 0.0}), 0.0);
}

TEST(GeomPhaseTest, AnalyticVanishesForXXModel) {
    for (double l : {-2.0, -1.2, 0.0, 0.5, 1.5, 3.0}) EXPECT_EQ(gp_analytic(XYParams{l, 0.0, 0.0}), 0.0);
}

TEST(GeomPhaseTest, AnalyticNearSphereWithStrongAnisotropy) {
    const XYParams p{0.01, 1.0, 0.0};
    EXPECT_NEAR(p.theta() / kDeg, 89.427, 1e-3);
    EXPECT_NEAR(gp_analytic(p) / kDeg, 178.2, 0.05);
}

TEST(GeomPhaseTest, PancharatnamIsGaugeInvariant) {
    const XYParams p{1.2, 0.7, 0.0};
    std::vector<StateVector> loop;
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> gauge(0.0, 2.0 * pi);
    const int m = 64;
    for (int k = 0; k < m; ++k) {
        XYParams q = p;
        q.phi = k * pi / m;
        loop.push_back(ground_state(q).state.with_phase(gauge(rng)));
    }
    EXPECT_NEAR(wrap_pm_pi(pancharatnam_phase(loop) - gp_discrete(p, m)), 0.0, 1e-12);
}

TEST(GeomPhaseTest, DiscreteConvergesToAnalytic) {
    const XYParams p{1.1, 0.6, 0.0};
    EXPECT_NEAR(wrap_pm_pi(gp_discrete(p, 10000) - gp_analytic(p)), 0.0, 1e-6);
    EXPECT_THROW(gp_discrete(p, 4), ValidationError);
}

TEST(GeomPhaseTest, DiscreteVanishesInsideSphere) {
    EXPECT_EQ(gp_discrete(XYParams{0.2, 0.5, 0.0}, 64), 0.0);
}

TEST(GeomPhaseTest, WrapHelpers) {
    EXPECT_NEAR(wrap_pm_pi(3.0 * pi / 2.0), -pi / 2.0, 1e-15);
    EXPECT_NEAR(wrap_pm_pi(-pi), pi, 1e-15);
    EXPECT_NEAR(wrap_2pi(-pi / 2.0), 3.0 * pi / 2.0, 1e-15);
    EXPECT_NEAR(angular_distance(0.1, 2.0 * pi - 0.1), 0.2, 1e-14);
}

TEST(GeomPhaseTest, HalfSumResolvesTowardReference) {
    // (a + b)/2 is only known mod pi.
    const double truth = 25.0 * kDeg;
    const double a = wrap_pm_pi(truth + 3.0);
    const double b = wrap_pm_pi(truth - 3.0);
    EXPECT_NEAR(resolve_half_sum(a, b, 23.0 * kDeg), truth, 1e-12);
    EXPECT_NEAR(resolve_half_sum(a, b, truth + pi - 0.1), truth + pi, 1e-12);
}

TEST(GeomPhaseTest, DynamicalPhaseSignsOpposite) {
    const CycleSpec c{Path::C, XYParams{0.0, 0.5, 0.0}, 5, 3.0};
    CycleSpec cbar = c;
    cbar.path = Path::Cbar;
    EXPECT_NEAR(dynamical_phase(c), 3.0, 1e-15);
    EXPECT_NEAR(dynamical_phase(cbar), -3.0, 1e-15);
    const CycleSpec outside{Path::C, XYParams{1.5, 0.5, 0.0}, 5, 2.0};
    EXPECT_NEAR(dynamical_phase(outside), 2.0 * outside.params.r(), 1e-15);
}

TEST(GeomPhaseTest, CycleSpecValidation) {
    EXPECT_THROW((CycleSpec{Path::C, XYParams{}, 0, 1.0}.validate()), ValidationError);
    EXPECT_THROW((CycleSpec{Path::C, XYParams{}, 4, 0.0}.validate()), ValidationError);
    const CycleSpec s{Path::Cbar, XYParams{}, 4, 10.0};
    EXPECT_NEAR(s.phi_at(0), pi, 1e-15);
    EXPECT_NEAR(s.phi_at(4), 2.0 * pi, 1e-15);
    EXPECT_NEAR(s.step_time(), 2.0, 1e-15);
}

}  // namespace
}  // namespace xygp
