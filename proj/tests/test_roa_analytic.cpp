/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pendroa/roa_analytic.hpp"

namespace pendroa {
namespace {

using std::numbers::pi;

AnalyticOracle oracle_for(const char* name, double fraction) {
    const PendulumParams p = preset(name);
    return AnalyticOracle::build(p, {}, TorqueLimit::fraction_of_gravity(p, fraction));
}

Eigen::Matrix2d closed_loop_matrix(const AnalyticOracle& o) {
    const LinearModel lin = linearize(o.params());
    return lin.A - lin.B * Eigen::RowVector2d(o.gains().k0, o.gains().k1);
}

class AnalyticPresets : public ::testing::TestWithParam<oracle::Row> {};

TEST_P(AnalyticPresets, ModeCoefficientsReconstructInitialState) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    const auto& sp = o.spectrum();
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const State x{th(gen), om(gen)};
        const ModeCoefficients m = o.mode_coefficients(x);
        EXPECT_NEAR(m.c0 + m.c1, x.theta, 1e-10);
        EXPECT_NEAR(sp.kappa0 * m.c0 + sp.kappa1 * m.c1, x.omega, 1e-10);
        const double K0 = o.gains().k0, K1 = o.gains().k1;
        EXPECT_DOUBLE_EQ(m.a0, -(K0 + K1 * sp.kappa0) * sp.kappa0 * m.c0);
        EXPECT_DOUBLE_EQ(m.a1, -(K0 + K1 * sp.kappa1) * sp.kappa1 * m.c1);
    }
}

TEST_P(AnalyticPresets, ZeroAndEigenvectorStates) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    const ModeCoefficients zero = o.mode_coefficients({0.0, 0.0});
    EXPECT_EQ(zero.c0, 0.0);
    EXPECT_EQ(zero.c1, 0.0);
    EXPECT_FALSE(o.extremum_time(State{0.0, 0.0}).has_value());

    const State slow{1.0, o.spectrum().kappa0};
    const ModeCoefficients m = o.mode_coefficients(slow);
    EXPECT_NEAR(m.c0, 1.0, 1e-12);
    EXPECT_EQ(m.c1, 0.0);
    EXPECT_FALSE(o.extremum_time(slow).has_value());
}

TEST_P(AnalyticPresets, StateMatchesLinearFlow) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    const Eigen::Matrix2d M = closed_loop_matrix(o);
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const State x{th(gen), om(gen)};
        const auto traj = oracle::rk4_linear(M, {x.theta, x.omega}, 1e-3, 1.0);
        for (double t : {0.1, 0.5, 1.0}) {
            const State s = o.state_at(x, t);
            const Eigen::Vector2d ref = traj[static_cast<std::size_t>(std::llround(t / 1e-3))];
            EXPECT_NEAR(s.theta, ref(0), 1e-6);
            EXPECT_NEAR(s.omega, ref(1), 1e-6);
            const Eigen::Vector2d ex = oracle::linear_flow(M, {x.theta, x.omega}, t);
            EXPECT_NEAR(s.theta, ex(0), 1e-9);
            EXPECT_NEAR(s.omega, ex(1), 1e-9);
        }
    }
}

TEST_P(AnalyticPresets, TorqueMatchesFeedbackAlongLinearTrajectory) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    const Eigen::Matrix2d M = closed_loop_matrix(o);
    const Eigen::RowVector2d K(o.gains().k0, o.gains().k1);
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const State x{th(gen), om(gen)};
        EXPECT_EQ(o.torque_at(x, 0.0), o.gains().torque(x)) << "u_lin(0) = -K x0";
        const auto traj = oracle::rk4_linear(M, {x.theta, x.omega}, 1e-3, 5.0);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.size(); k += 10)
            worst = std::max(worst, std::abs(o.torque_at(x, 1e-3 * static_cast<double>(k)) + K * traj[k]));
        EXPECT_LT(worst, 1e-6);
    }
}

TEST_P(AnalyticPresets, ExtremumTimeIsStationaryPoint) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    std::mt19937_64 gen(24);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 100; ++i) {
        const State x{th(gen), om(gen)};
        const ModeCoefficients m = o.mode_coefficients(x);
        const auto t_star = o.extremum_time(m);
        if (!t_star || *t_star <= 0.0) continue;
        ++checked;
        const double amp = std::max(std::abs(m.a0), std::abs(m.a1));
        auto u = [&](double t) { return o.torque_at(m, t); };
        EXPECT_LT(std::abs(oracle::central_difference(u, *t_star, 1e-6)), 1e-9 * amp);
        EXPECT_LT(std::abs(o.torque_rate_at(m, *t_star)), 1e-12 * amp);

        // The derivative changes sign across t*; locate it independently.
        auto du = [&](double t) { return oracle::central_difference(u, t, 1e-6); };
        const double lo = std::max(0.5 * *t_star, *t_star - 0.5), hi = *t_star + 0.5;
        ASSERT_NE(du(lo) < 0.0, du(hi) < 0.0);
        EXPECT_NEAR(oracle::bisect(du, lo, hi), *t_star, 1e-6);
    }
    EXPECT_EQ(checked, 100);
}

TEST_P(AnalyticPresets, SymmetricMembership) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.25);
    std::mt19937_64 gen(25);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const State x{th(gen), om(gen)};
        EXPECT_EQ(o.contains(x), o.contains(-x));
        EXPECT_EQ(o.contains_unbounded(x), o.contains_unbounded(-x));
        EXPECT_EQ(o.heuristic_ok(x), o.heuristic_ok(-x));
    }
}

TEST_P(AnalyticPresets, StarShapedAlongRays) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    std::mt19937_64 gen(26);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    int members = 0;
    while (members < 1000) {
        const State x{th(gen), om(gen)};
        if (!o.contains(x)) continue;
        ++members;
        for (double s : {0.25, 0.5, 0.75}) EXPECT_TRUE(o.contains(s * x)) << x.theta << ", " << x.omega;
    }
}

TEST_P(AnalyticPresets, HeuristicMonotoneInAngle) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.5);
    double prev = -1.0;
    for (double th = 0.0; th <= pi; th += 1e-3) {
        const double h = o.heuristic_value({th, 0.0});
        EXPECT_GE(h, prev);
        prev = h;
    }
}

TEST_P(AnalyticPresets, AnalyticImpliesUnbound) {
    const AnalyticOracle o = oracle_for(GetParam().name, 0.125);
    std::mt19937_64 gen(27);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const State x{th(gen), om(gen)};
        if (o.contains(x)) EXPECT_TRUE(o.contains_unbounded(x));
        const AnalyticDiagnostics d = o.diagnose(x);
        EXPECT_EQ(d.in_analytic, o.contains(x));
        EXPECT_EQ(d.in_unbound, o.contains_unbounded(x));
    }
}

INSTANTIATE_TEST_SUITE_P(Presets, AnalyticPresets, ::testing::ValuesIn(oracle::kRows),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(AnalyticOracle, OriginIsMember) {
    const AnalyticOracle o = oracle_for("normal", 0.125);
    EXPECT_TRUE(o.contains({0.0, 0.0}));
    EXPECT_TRUE(o.contains_unbounded({0.0, 0.0}));
    for (double t : {0.0, 0.3, 2.0}) EXPECT_EQ(o.torque_at(State{0.0, 0.0}, t), 0.0);
}

TEST(AnalyticOracle, HeuristicHandValues) {
    const AnalyticOracle o = oracle_for("normal", 0.5);
    EXPECT_TRUE(o.heuristic_ok({0.0, 3.0}));
    EXPECT_NEAR(o.heuristic_value({pi, 0.0}), 0.676 * 9.81 * 0.45 * pi, 1e-12);
    EXPECT_NEAR(o.heuristic_value({pi, 0.0}), 9.37, 0.01);
    EXPECT_FALSE(o.heuristic_ok({pi, 0.0}));
}

TEST(AnalyticOracle, ReportedSwitchStateLiesAtRegionBoundary) {
    // (0.416 pi, -4.4) fails only the extremum condition, by a few percent;
    // a slightly smaller angle on the same velocity is inside.
    const AnalyticOracle o = oracle_for("normal", 0.5);
    const AnalyticDiagnostics d = o.diagnose({0.416 * pi, -4.4});
    EXPECT_TRUE(d.heuristic_ok);
    EXPECT_LE(d.initial_torque, o.limit().value());
    ASSERT_TRUE(d.extremum_torque.has_value());
    EXPECT_LT(*d.extremum_torque, 1.07 * o.limit().value());
    EXPECT_TRUE(o.contains({0.40 * pi, -4.4}));
}

TEST(AnalyticOracle, ConditionsMatchDirectEvaluation) {
    const AnalyticOracle o = oracle_for("long", 0.25);
    const double u_bar = o.limit().value();
    std::mt19937_64 gen(28);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    for (int i = 0; i < 5000; ++i) {
        const State x{th(gen), om(gen)};
        const double mgl = o.params().gravity_torque_max();
        bool expect = mgl * std::abs(std::sin(x.theta) - x.theta) <= u_bar &&
                      std::abs(o.gains().k0 * x.theta + o.gains().k1 * x.omega) <= u_bar;
        if (const auto t = o.extremum_time(x); t && *t > 0.0) expect = expect && std::abs(o.torque_at(x, *t)) <= u_bar;
        EXPECT_EQ(o.contains(x), expect);
    }
}

TEST(AnalyticOracle, MembershipGrowsWithLimit) {
    const PendulumParams p = preset_short();
    const GainPair k = solve_lqr(p, {}).K;
    std::mt19937_64 gen(29);
    std::uniform_real_distribution<double> th(-pi, pi), om(-10.0, 10.0);
    const AnalyticOracle o2(p, k, TorqueLimit::fraction_of_gravity(p, 0.5));
    const AnalyticOracle o4(p, k, TorqueLimit::fraction_of_gravity(p, 0.25));
    const AnalyticOracle o8(p, k, TorqueLimit::fraction_of_gravity(p, 0.125));
    for (int i = 0; i < 20000; ++i) {
        const State x{th(gen), om(gen)};
        if (o8.contains(x)) EXPECT_TRUE(o4.contains(x));
        if (o4.contains(x)) EXPECT_TRUE(o2.contains(x));
    }
}

TEST(AnalyticOracle, NoImplicitWrapping) {
    const AnalyticOracle o = oracle_for("normal", 0.5);
    EXPECT_TRUE(o.contains({0.0, 0.0}));
    EXPECT_FALSE(o.contains({2.0 * pi, 0.0}));
}

TEST(AnalyticOracle, RejectsOscillatoryGains) {
    const PendulumParams p = preset_normal();
    EXPECT_THROW(AnalyticOracle(p, {100.0, 0.1}, TorqueLimit(1.0)), NumericFailure);
}

} // namespace
} // namespace pendroa
