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

#ifndef PENDROA_ROA_ANALYTIC_HPP
#define PENDROA_ROA_ANALYTIC_HPP

#include <cmath>
#include <optional>

#include "pendroa/lqr.hpp"
#include "pendroa/model.hpp"

namespace pendroa {

/**
 * Modal decomposition of a linearized closed-loop trajectory:
 *
 *   theta(t) = c0 e^{kappa0 t} + c1 e^{kappa1 t}
 *   omega(t) = kappa0 c0 e^{kappa0 t} + kappa1 c1 e^{kappa1 t}
 *
 * a0, a1 are the amplitudes of d/dt u_lin(t), a_i = -(K0 + K1 kappa_i) kappa_i c_i.
 */
struct ModeCoefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;
};

/// Everything contains() looks at, for reporting.
struct AnalyticDiagnostics {
    double heuristic = 0.0;    ///< m g l |sin(theta) - theta|
    double initial_torque = 0.0; ///< |u_lin(0)|
    std::optional<double> t_star;          ///< extremum time, may be <= 0
    std::optional<double> extremum_torque; ///< |u_lin(t*)| when t* > 0
    bool heuristic_ok = false;
    bool in_unbound = false;
    bool in_analytic = false;
};

/**
 * @brief Closed-form region-of-attraction oracle for the saturated LQR loop.
 *
 * A state x0 is accepted when the torque the linearized closed loop would
 * request along its whole future, u_lin(t) = -K x_lin(t), stays inside the
 * limit (checked at t = 0 and at the single interior extremum, if any), and
 * the gravity linearization error m g l |sin(theta) - theta| is itself within
 * the limit. Immutable; all queries are pure.
 *
 * No angle wrapping is applied: theta = 2 pi is far from the origin for the
 * linear controller. Wrap first if the physical configuration is meant.
 */
class AnalyticOracle {
public:
    /// Throws NumericFailure if the closed-loop spectrum is not real and stable.
    AnalyticOracle(const PendulumParams& params, const GainPair& gains, const TorqueLimit& limit)
        : params_(validated(params)), gains_(gains), limit_(limit),
          spectrum_(closed_loop_spectrum(params_, gains_)) {
        inv_sqrt_d_ = 1.0 / spectrum_.sqrt_d();
        mode_gain0_ = gains_.k0 + gains_.k1 * spectrum_.kappa0;
        mode_gain1_ = gains_.k0 + gains_.k1 * spectrum_.kappa1;
    }

    /// Solves the LQR problem for the given weights and builds the oracle.
    static AnalyticOracle build(const PendulumParams& params, const CostWeights& weights,
                                const TorqueLimit& limit) {
        return AnalyticOracle(params, solve_lqr(params, weights).K, limit);
    }

    [[nodiscard]] const PendulumParams& params() const { return params_; }
    [[nodiscard]] const GainPair& gains() const { return gains_; }
    [[nodiscard]] const ClosedLoopSpectrum& spectrum() const { return spectrum_; }
    [[nodiscard]] const TorqueLimit& limit() const { return limit_; }

    [[nodiscard]] ModeCoefficients mode_coefficients(State x0) const {
        const double k0 = spectrum_.kappa0;
        const double k1 = spectrum_.kappa1;
        ModeCoefficients m;
        m.c0 = (-k1 * x0.theta + x0.omega) * inv_sqrt_d_;
        m.c1 = (k0 * x0.theta - x0.omega) * inv_sqrt_d_;
        m.a0 = -mode_gain0_ * k0 * m.c0;
        m.a1 = -mode_gain1_ * k1 * m.c1;
        return m;
    }

    /// Linearized state at time t.
    [[nodiscard]] State state_at(State x0, double t) const {
        const ModeCoefficients m = mode_coefficients(x0);
        const double e0 = m.c0 * std::exp(spectrum_.kappa0 * t);
        const double e1 = m.c1 * std::exp(spectrum_.kappa1 * t);
        return {e0 + e1, spectrum_.kappa0 * e0 + spectrum_.kappa1 * e1};
    }

    /// u_lin(t) = -(K0 + K1 kappa0) c0 e^{kappa0 t} - (K0 + K1 kappa1) c1 e^{kappa1 t}.
    /// At t = 0 this is -K x0 exactly.
    [[nodiscard]] double torque_at(State x0, double t) const {
        if (t == 0.0) return gains_.torque(x0);
        return torque_at(mode_coefficients(x0), t);
    }

    [[nodiscard]] double torque_at(const ModeCoefficients& m, double t) const {
        return -mode_gain0_ * m.c0 * std::exp(spectrum_.kappa0 * t) -
               mode_gain1_ * m.c1 * std::exp(spectrum_.kappa1 * t);
    }

    /// d/dt u_lin(t) = a0 e^{kappa0 t} + a1 e^{kappa1 t}
    [[nodiscard]] double torque_rate_at(const ModeCoefficients& m, double t) const {
        return m.a0 * std::exp(spectrum_.kappa0 * t) + m.a1 * std::exp(spectrum_.kappa1 * t);
    }

    /**
     * Time of the unique stationary point of u_lin, t* = -ln(-a0/a1)/sqrt(D).
     * Absent when either amplitude vanishes (single monotone exponential) or
     * -a0/a1 is not strictly positive. t* may be negative.
     */
    [[nodiscard]] std::optional<double> extremum_time(State x0) const {
        return extremum_time(mode_coefficients(x0));
    }

    [[nodiscard]] std::optional<double> extremum_time(const ModeCoefficients& m) const {
        if (m.a0 == 0.0 || m.a1 == 0.0) return std::nullopt;
        const double ratio = -m.a0 / m.a1;
        if (!(ratio > 0.0) || !std::isfinite(ratio)) return std::nullopt;
        return -std::log(ratio) * inv_sqrt_d_;
    }

    [[nodiscard]] double heuristic_value(State x0) const {
        return params_.gravity_torque_max() * std::abs(std::sin(x0.theta) - x0.theta);
    }

    [[nodiscard]] bool heuristic_ok(State x0) const { return heuristic_value(x0) <= limit_.value(); }

    /// Torque conditions only (no linearization heuristic). Not conservative.
    [[nodiscard]] bool contains_unbounded(State x0) const {
        const double u_bar = limit_.value();
        if (!(std::abs(gains_.torque(x0)) <= u_bar)) return false;
        const ModeCoefficients m = mode_coefficients(x0);
        const auto t_star = extremum_time(m);
        if (t_star && *t_star > 0.0) return std::abs(torque_at(m, *t_star)) <= u_bar;
        return true;
    }

    [[nodiscard]] bool contains(State x0) const { return heuristic_ok(x0) && contains_unbounded(x0); }

    [[nodiscard]] AnalyticDiagnostics diagnose(State x0) const {
        AnalyticDiagnostics d;
        const ModeCoefficients m = mode_coefficients(x0);
        d.heuristic = heuristic_value(x0);
        d.heuristic_ok = d.heuristic <= limit_.value();
        d.initial_torque = std::abs(gains_.torque(x0));
        d.t_star = extremum_time(m);
        if (d.t_star && *d.t_star > 0.0) d.extremum_torque = std::abs(torque_at(m, *d.t_star));
        d.in_unbound = d.initial_torque <= limit_.value() &&
                       (!d.extremum_torque || *d.extremum_torque <= limit_.value());
        d.in_analytic = d.heuristic_ok && d.in_unbound;
        return d;
    }

private:
    static const PendulumParams& validated(const PendulumParams& p) {
        p.validate();
        return p;
    }

    PendulumParams params_;
    GainPair gains_;
    TorqueLimit limit_;
    ClosedLoopSpectrum spectrum_;
    double inv_sqrt_d_ = 0.0;
    double mode_gain0_ = 0.0; // K0 + K1 kappa0
    double mode_gain1_ = 0.0; // K0 + K1 kappa1
};

} // namespace pendroa

#endif // PENDROA_ROA_ANALYTIC_HPP
