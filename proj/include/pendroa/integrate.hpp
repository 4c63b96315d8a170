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

#ifndef PENDROA_INTEGRATE_HPP
#define PENDROA_INTEGRATE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "pendroa/csv.hpp"
#include "pendroa/model.hpp"

namespace pendroa {

/**
 * Fixed-step settings. The default step of 0.02 s resolves the fast
 * closed-loop pole of the stiffest preset (about -21.6 1/s); at 0.1 s the
 * per-stage feedback of RK4 saturates spuriously on that preset and the
 * convergence classification changes.
 */
struct IntegrationConfig {
    double dt = 0.02;              ///< s
    double t_final = 10.0;         ///< s
    double convergence_tol = 1e-5; ///< applied to |theta| and |omega| at t_final
    double blowup = 1e6;           ///< |theta| or |omega| beyond this aborts as diverged

    void validate() const {
        if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be finite and > 0");
        if (!(t_final >= dt) || !std::isfinite(t_final))
            throw std::invalid_argument("t_final must be finite and >= dt");
        if (!(convergence_tol > 0.0)) throw std::invalid_argument("convergence tolerance must be > 0");
        if (!(blowup > 0.0)) throw std::invalid_argument("blow-up threshold must be > 0");
    }

    [[nodiscard]] std::size_t steps() const {
        return static_cast<std::size_t>(std::llround(t_final / dt));
    }

    [[nodiscard]] bool converged(State x) const {
        return std::abs(x.theta) < convergence_tol && std::abs(x.omega) < convergence_tol;
    }
};

/**
 * Classical four-stage Runge-Kutta step. @p f is either a full vector field
 * (State -> State derivative) or an acceleration (State -> theta''), in which
 * case theta' = omega is implied. Throws std::domain_error on a non-finite
 * result.
 */
template <class F>
State rk4_step(F&& f, State x, double dt) {
    auto field = [&](State s) -> State {
        if constexpr (std::is_same_v<std::invoke_result_t<F&, State>, State>) {
            return f(s);
        } else {
            return {s.omega, static_cast<double>(f(s))};
        }
    };
    const State k1 = field(x);
    const State k2 = field(x + (0.5 * dt) * k1);
    const State k3 = field(x + (0.5 * dt) * k2);
    const State k4 = field(x + dt * k3);
    const State next = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.is_finite()) throw std::domain_error("rk4_step: non-finite state");
    return next;
}

/// Outcome of one closed-loop run, without the trajectory itself.
struct TrajectoryOutcome {
    State final_state;
    bool converged = false;
    bool torque_limited = false; ///< some stage requested |u| > u_bar
    bool diverged = false;       ///< blow-up threshold or non-finite state
};

struct TrajectoryRecord {
    double dt = 0.0;
    std::vector<State> states;
    std::vector<double> applied;        ///< saturated torque at the start of each step
    std::vector<double> requested;      ///< pre-saturation torque at the start of each step
    std::vector<double> peak_requested; ///< max |u| requested over the step's four stages
    bool converged = false;
    bool torque_limited = false;
    bool diverged = false;

    /// Columns t, theta, omega, u_applied, u_requested. The final state has no
    /// step of its own, so its torque cells are empty.
    void write_csv(std::ostream& os) const {
        CsvWriter csv(os);
        csv.header({"t", "theta", "omega", "u_applied", "u_requested"});
        for (std::size_t i = 0; i < states.size(); ++i) {
            csv.field(static_cast<double>(i) * dt).field(states[i].theta).field(states[i].omega);
            if (i < applied.size())
                csv.field(applied[i]).field(requested[i]);
            else
                csv.empty().empty();
            csv.end_row();
        }
    }
};

namespace detail {

// Integrates x'' = accel(x, sat(controller(x))) with the controller evaluated
// at every RK4 stage. on_step(k, x_k, requested_k, applied_k, peak_k) fires
// for each completed step k.
template <class Controller, class OnStep>
TrajectoryOutcome run_closed_loop(const PendulumParams& p, Controller&& controller,
                                  const TorqueLimit& lim, State x0, const IntegrationConfig& cfg,
                                  OnStep&& on_step) {
    cfg.validate();
    if (!x0.is_finite()) throw std::invalid_argument("initial state must be finite");

    TrajectoryOutcome out;
    double peak = 0.0;
    auto accel = [&](State s) {
        const double u = controller(s);
        peak = std::max(peak, std::abs(u));
        return open_loop_accel(p, s, saturate(u, lim));
    };

    State x = x0;
    const std::size_t n = cfg.steps();
    for (std::size_t k = 0; k < n; ++k) {
        const double requested = controller(x);
        peak = 0.0;
        State next;
        try {
            next = rk4_step(accel, x, cfg.dt);
        } catch (const std::domain_error&) {
            out.diverged = true;
        }
        if (peak > lim.value()) out.torque_limited = true;
        if (out.diverged) break;
        on_step(k, x, requested, saturate(requested, lim), peak);
        x = next;
        if (std::abs(x.theta) > cfg.blowup || std::abs(x.omega) > cfg.blowup) {
            out.diverged = true;
            break;
        }
    }
    out.final_state = x;
    out.converged = !out.diverged && cfg.converged(x);
    return out;
}

} // namespace detail

/// Runs the saturated LQR loop from x0 and reports only the classification.
inline TrajectoryOutcome classify(const PendulumParams& p, const GainPair& k, const TorqueLimit& lim,
                                  State x0, const IntegrationConfig& cfg = {}) {
    return detail::run_closed_loop(
        p, [&](State s) { return k.torque(s); }, lim, x0, cfg,
        [](std::size_t, State, double, double, double) {});
}

/**
 * @brief Integrates the saturated LQR closed loop over [0, t_final].
 *
 * Numeric blow-up yields a record with diverged = converged = false rather
 * than an exception.
 */
inline TrajectoryRecord simulate(const PendulumParams& p, const GainPair& k, const TorqueLimit& lim,
                                 State x0, const IntegrationConfig& cfg = {}) {
    cfg.validate();
    TrajectoryRecord rec;
    rec.dt = cfg.dt;
    rec.states.reserve(cfg.steps() + 1);
    const TrajectoryOutcome out = detail::run_closed_loop(
        p, [&](State s) { return k.torque(s); }, lim, x0, cfg,
        [&](std::size_t, State x, double req, double app, double peak) {
            rec.states.push_back(x);
            rec.requested.push_back(req);
            rec.applied.push_back(app);
            rec.peak_requested.push_back(peak);
        });
    rec.states.push_back(out.final_state);
    rec.converged = out.converged;
    rec.torque_limited = out.torque_limited;
    rec.diverged = out.diverged;
    return rec;
}

} // namespace pendroa

#endif // PENDROA_INTEGRATE_HPP
