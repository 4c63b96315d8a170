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

#ifndef PENDROA_SWINGUP_HPP
#define PENDROA_SWINGUP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pendroa/csv.hpp"
#include "pendroa/integrate.hpp"
#include "pendroa/model.hpp"
#include "pendroa/roa_analytic.hpp"

namespace pendroa {

enum class ActiveController { EnergyShaping, Lqr };

inline std::string_view to_string(ActiveController c) {
    return c == ActiveController::Lqr ? "lqr" : "energy";
}

/// Energy-shaping swing-up that hands over to the LQR inside the analytic ROA.
struct SwingupConfig {
    double c = 1.0; ///< energy-shaping gain
    AnalyticOracle oracle;

    SwingupConfig(double gain, AnalyticOracle roa) : c(gain), oracle(std::move(roa)) {
        if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("swing-up gain c must be > 0");
    }

    [[nodiscard]] const GainPair& gains() const { return oracle.gains(); }
    [[nodiscard]] const TorqueLimit& limit() const { return oracle.limit(); }
};

struct SwingupCommand {
    double torque = 0.0; ///< pre-saturation
    ActiveController active = ActiveController::EnergyShaping;
};

/// u = -c omega dE(x) + b omega, with the angle wrapped to (-pi, pi].
inline double energy_shaping_torque(const SwingupConfig& cfg, State x) {
    const State w = wrap(x);
    const PendulumParams& p = cfg.oracle.params();
    return -cfg.c * w.omega * energy_difference(p, w) + p.damping * w.omega;
}

/// Memoryless hybrid law: LQR on the wrapped state inside the analytic ROA,
/// energy shaping elsewhere. The caller saturates.
inline SwingupCommand swingup_torque(const SwingupConfig& cfg, State x) {
    const State w = wrap(x);
    if (cfg.oracle.contains(w)) return {cfg.gains().torque(w), ActiveController::Lqr};
    return {energy_shaping_torque(cfg, x), ActiveController::EnergyShaping};
}

struct SwingupRecord {
    TrajectoryRecord trajectory;
    std::vector<ActiveController> active; ///< one per step
    std::optional<double> switch_time;    ///< first (and only) hand-over to the LQR
    double post_switch_peak = 0.0;        ///< max |requested| over stages after the switch

    /// Columns t, theta, omega, u, active_controller. u is the applied torque.
    void write_csv(std::ostream& os) const {
        const TrajectoryRecord& tr = trajectory;
        CsvWriter csv(os);
        csv.header({"t", "theta", "omega", "u", "active_controller"});
        for (std::size_t i = 0; i < tr.states.size(); ++i) {
            csv.field(static_cast<double>(i) * tr.dt).field(tr.states[i].theta).field(tr.states[i].omega);
            if (i < tr.applied.size())
                csv.field(tr.applied[i]).field(to_string(active[i]));
            else
                csv.empty().field(to_string(active.empty() ? ActiveController::EnergyShaping : active.back()));
            csv.end_row();
        }
    }
};

/**
 * @brief Simulates the hybrid swing-up controller.
 *
 * The hand-over latches: once the step-start state lies in the analytic ROA
 * the LQR stays active for the rest of the run. The controller is evaluated
 * at every RK4 stage. From an exact hanging rest state the energy law is
 * identically zero, so a +u_bar kick is applied for that one step.
 * converged is judged on the wrapped final state.
 */
inline SwingupRecord run_swingup(const SwingupConfig& cfg, State x0, const IntegrationConfig& sim = {}) {
    sim.validate();
    if (!x0.is_finite()) throw std::invalid_argument("initial state must be finite");

    const PendulumParams& p = cfg.oracle.params();
    const TorqueLimit& lim = cfg.limit();
    SwingupRecord rec;
    TrajectoryRecord& tr = rec.trajectory;
    tr.dt = sim.dt;

    bool latched = false;
    std::optional<double> kick;
    double peak = 0.0;
    auto stage_torque = [&](State s) {
        if (kick) return *kick;
        return latched ? cfg.gains().torque(wrap(s)) : energy_shaping_torque(cfg, s);
    };
    auto accel = [&](State s) {
        const double u = stage_torque(s);
        peak = std::max(peak, std::abs(u));
        return open_loop_accel(p, s, saturate(u, lim));
    };

    State x = x0;
    const std::size_t n = sim.steps();
    for (std::size_t k = 0; k < n; ++k) {
        if (!latched && cfg.oracle.contains(wrap(x))) {
            latched = true;
            rec.switch_time = static_cast<double>(k) * sim.dt;
        }
        kick.reset();
        if (!latched && std::abs(x.omega) < 1e-6 && std::abs(energy_shaping_torque(cfg, x)) < 1e-6)
            kick = lim.is_unlimited() ? 1.0 : lim.value();

        const double requested = stage_torque(x);
        peak = 0.0;
        State next;
        try {
            next = rk4_step(accel, x, sim.dt);
        } catch (const std::domain_error&) {
            tr.diverged = true;
            break;
        }
        if (peak > lim.value()) tr.torque_limited = true;
        if (latched) rec.post_switch_peak = std::max(rec.post_switch_peak, peak);

        tr.states.push_back(x);
        tr.requested.push_back(requested);
        tr.applied.push_back(saturate(requested, lim));
        tr.peak_requested.push_back(peak);
        rec.active.push_back(latched ? ActiveController::Lqr : ActiveController::EnergyShaping);
        x = next;
        if (std::abs(x.theta) > sim.blowup || std::abs(x.omega) > sim.blowup) {
            tr.diverged = true;
            break;
        }
    }
    tr.states.push_back(x);
    tr.converged = !tr.diverged && sim.converged(wrap(x));
    return rec;
}

} // namespace pendroa

#endif // PENDROA_SWINGUP_HPP
