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

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "pendroa/swingup.hpp"

namespace pendroa {
namespace {

using std::numbers::pi;

SwingupConfig config_for(const char* name, double fraction = 0.5, double c = 1.0) {
    const PendulumParams p = preset(name);
    return SwingupConfig(c, AnalyticOracle::build(p, {}, TorqueLimit::fraction_of_gravity(p, fraction)));
}

TEST(SwingupConfig, RequiresPositiveGain) {
    const PendulumParams p = preset_normal();
    const AnalyticOracle o = AnalyticOracle::build(p, {}, TorqueLimit(1.0));
    EXPECT_THROW(SwingupConfig(0.0, o), std::invalid_argument);
    EXPECT_THROW(SwingupConfig(-1.0, o), std::invalid_argument);
}

TEST(SwingupTorque, BranchSelection) {
    const SwingupConfig cfg = config_for("normal");
    const SwingupCommand origin = swingup_torque(cfg, {0.0, 0.0});
    EXPECT_EQ(origin.active, ActiveController::Lqr);
    EXPECT_EQ(origin.torque, 0.0);

    const SwingupCommand sw = swingup_torque(cfg, {0.40 * pi, -4.4});
    EXPECT_EQ(sw.active, ActiveController::Lqr);
    EXPECT_EQ(sw.torque, cfg.gains().torque({0.40 * pi, -4.4}));

    const SwingupCommand rest = swingup_torque(cfg, {pi, 0.0});
    EXPECT_EQ(rest.active, ActiveController::EnergyShaping);
    EXPECT_EQ(rest.torque, 0.0);
}

TEST(SwingupTorque, WrapsBeforeQuery) {
    const SwingupConfig cfg = config_for("normal");
    const SwingupCommand a = swingup_torque(cfg, {2.0 * pi + 0.1, 0.0});
    EXPECT_EQ(a.active, ActiveController::Lqr);
    EXPECT_NEAR(a.torque, cfg.gains().torque({0.1, 0.0}), 1e-12);
}

TEST(EnergyShaping, PumpsEnergyTowardUpright) {
    const SwingupConfig cfg = config_for("normal");
    const PendulumParams& p = cfg.oracle.params();
    // Below the upright energy, u omega must be positive apart from the damping term.
    for (double th : {2.0, 2.5, 3.0, -2.5}) {
        for (double om : {-2.0, -0.5, 0.5, 2.0}) {
            const State x{th, om};
            ASSERT_LT(energy_difference(p, x), 0.0);
            EXPECT_GT((energy_shaping_torque(cfg, x) - p.damping * om) * om, 0.0);
        }
    }
}

class SwingupPresets : public ::testing::TestWithParam<const char*> {};

TEST_P(SwingupPresets, ReachesUprightAndRespectsLimitAfterSwitch) {
    const SwingupConfig cfg = config_for(GetParam());
    const SwingupRecord rec = run_swingup(cfg, {pi - 0.01, 0.0});
    ASSERT_TRUE(rec.switch_time.has_value());
    const State xf = wrap(rec.trajectory.states.back());
    EXPECT_LT(std::abs(xf.theta), 0.1);
    EXPECT_LT(std::abs(xf.omega), 0.1);
    EXPECT_LE(rec.post_switch_peak, cfg.limit().value());

    // One-way latch: energy, then only LQR.
    bool seen_lqr = false;
    for (ActiveController a : rec.active) {
        if (a == ActiveController::Lqr) seen_lqr = true;
        else EXPECT_FALSE(seen_lqr);
    }
    for (double u : rec.trajectory.applied) {
        EXPECT_TRUE(std::isfinite(u));
        EXPECT_LE(std::abs(u), cfg.limit().value());
    }

    // Once below tolerance it stays there.
    const IntegrationConfig sim;
    bool settled = false;
    for (const State& x : rec.trajectory.states) {
        const bool in = sim.converged(wrap(x));
        if (settled) EXPECT_TRUE(in);
        settled = settled || in;
    }
}

INSTANTIATE_TEST_SUITE_P(Presets, SwingupPresets, ::testing::Values("normal", "long", "short"));

TEST(RunSwingup, StartInsideRegionSwitchesImmediately) {
    const SwingupRecord rec = run_swingup(config_for("normal"), {0.0, 0.0});
    ASSERT_TRUE(rec.switch_time.has_value());
    EXPECT_EQ(*rec.switch_time, 0.0);
    EXPECT_TRUE(rec.trajectory.converged);
}

TEST(RunSwingup, KickStartsExactRestState) {
    const SwingupConfig cfg = config_for("normal");
    const SwingupRecord rec = run_swingup(cfg, {pi, 0.0});
    ASSERT_FALSE(rec.trajectory.applied.empty());
    EXPECT_EQ(rec.trajectory.applied.front(), cfg.limit().value());
    EXPECT_TRUE(rec.switch_time.has_value());
    EXPECT_TRUE(rec.trajectory.converged);
}

TEST(RunSwingup, Deterministic) {
    const SwingupConfig cfg = config_for("long");
    const SwingupRecord a = run_swingup(cfg, {pi - 0.01, 0.0});
    const SwingupRecord b = run_swingup(cfg, {pi - 0.01, 0.0});
    EXPECT_EQ(a.trajectory.states, b.trajectory.states);
    EXPECT_EQ(a.switch_time, b.switch_time);
}

TEST(RunSwingup, CsvColumns) {
    const SwingupRecord rec = run_swingup(config_for("normal"), {pi - 0.01, 0.0}, {0.02, 4.0});
    std::ostringstream os;
    rec.write_csv(os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,theta,omega,u,active_controller");
    std::size_t rows = 0;
    bool energy = false, lqr = false;
    while (std::getline(in, line)) {
        ++rows;
        energy = energy || line.ends_with(",energy");
        lqr = lqr || line.ends_with(",lqr");
    }
    EXPECT_EQ(rows, rec.trajectory.states.size());
    EXPECT_TRUE(energy);
    EXPECT_TRUE(lqr);
}

} // namespace
} // namespace pendroa
