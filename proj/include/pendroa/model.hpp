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

#ifndef PENDROA_MODEL_HPP
#define PENDROA_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pendroa {

/// Thrown when a numeric construction is impossible (no stabilizing Riccati
/// solution, oscillatory or unstable closed-loop spectrum, ...).
class NumericFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

inline bool finite(double v) { return std::isfinite(v); }

} // namespace detail

/**
 * @brief Physical constants of a point-mass pendulum on a massless arm.
 *
 * The arm pivots about an actuated axis; theta = 0 is the upright
 * configuration. Use make() to obtain a validated instance.
 */
struct PendulumParams {
    double mass = 0.676;   ///< kg
    double length = 0.45;  ///< m, pivot to center of mass
    double gravity = 9.81; ///< m/s^2
    double damping = 0.1;  ///< N m s / rad

    static PendulumParams make(double mass, double length, double gravity = 9.81,
                               double damping = 0.1) {
        PendulumParams p{mass, length, gravity, damping};
        p.validate();
        return p;
    }

    void validate() const {
        detail::require(detail::finite(mass) && mass > 0.0, "mass must be finite and > 0");
        detail::require(detail::finite(length) && length > 0.0, "length must be finite and > 0");
        detail::require(detail::finite(gravity) && gravity > 0.0, "gravity must be finite and > 0");
        detail::require(detail::finite(damping) && damping >= 0.0, "damping must be finite and >= 0");
    }

    /// m l^2
    [[nodiscard]] double inertia() const { return mass * length * length; }

    /// m g l, the largest torque gravity can exert (arm horizontal).
    [[nodiscard]] double gravity_torque_max() const { return mass * gravity * length; }
};

// Reference rigs. The long arm carries the small mass and vice versa.
inline PendulumParams preset_normal() { return PendulumParams::make(0.676, 0.45); }
inline PendulumParams preset_long() { return PendulumParams::make(0.174, 1.744); }
inline PendulumParams preset_short() { return PendulumParams::make(1.744, 0.174); }

/// Looks up "normal", "long" or "short"; throws std::invalid_argument otherwise.
inline PendulumParams preset(std::string_view name) {
    if (name == "normal") return preset_normal();
    if (name == "long") return preset_long();
    if (name == "short") return preset_short();
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected normal, long or short)");
}

/// Phase-space point. theta is stored exactly as given; see wrap_angle().
struct State {
    double theta = 0.0; ///< rad, 0 = upright
    double omega = 0.0; ///< rad/s

    friend constexpr State operator+(State a, State b) { return {a.theta + b.theta, a.omega + b.omega}; }
    friend constexpr State operator-(State a) { return {-a.theta, -a.omega}; }
    friend constexpr State operator*(double s, State a) { return {s * a.theta, s * a.omega}; }
    friend constexpr bool operator==(const State&, const State&) = default;

    [[nodiscard]] bool is_finite() const { return detail::finite(theta) && detail::finite(omega); }
};

/// Maps an angle to (-pi, pi].
inline double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::remainder(theta, two_pi);
    if (w <= -std::numbers::pi) w += two_pi;
    return w;
}

inline State wrap(State x) { return {wrap_angle(x.theta), x.omega}; }

/// Symmetric actuator bound |u| <= u_bar. Infinity means unlimited.
class TorqueLimit {
public:
    explicit TorqueLimit(double u_bar) : u_bar_(u_bar) {
        detail::require(!std::isnan(u_bar) && u_bar > 0.0, "torque limit must be > 0");
    }

    static TorqueLimit unlimited() { return TorqueLimit(std::numeric_limits<double>::infinity()); }

    /// Fraction of the gravity torque m g l, e.g. 0.5 for the u~/2 setting.
    static TorqueLimit fraction_of_gravity(const PendulumParams& p, double fraction) {
        detail::require(detail::finite(fraction) && fraction > 0.0, "limit fraction must be > 0");
        return TorqueLimit(fraction * p.gravity_torque_max());
    }

    [[nodiscard]] double value() const { return u_bar_; }
    [[nodiscard]] bool is_unlimited() const { return std::isinf(u_bar_); }

private:
    double u_bar_;
};

/// State feedback u = -(k0 theta + k1 omega).
struct GainPair {
    double k0 = 0.0; ///< N m / rad
    double k1 = 0.0; ///< N m s / rad

    /// Written as a subtraction from +0 so the origin maps to +0, not -0.
    [[nodiscard]] double torque(State x) const { return 0.0 - (k0 * x.theta + k1 * x.omega); }
};

inline double saturate(double u, const TorqueLimit& lim) {
    return std::clamp(u, -lim.value(), lim.value());
}

/// theta'' = (m g l sin(theta) - b omega + u) / (m l^2). The caller saturates u.
inline double open_loop_accel(const PendulumParams& p, State x, double u) {
    if (!x.is_finite() || !detail::finite(u))
        throw std::domain_error("open_loop_accel: non-finite input");
    return (p.gravity_torque_max() * std::sin(x.theta) - p.damping * x.omega + u) / p.inertia();
}

/// Saturated LQR closed loop: u = sat(-K x) fed into the open-loop dynamics.
inline double closed_loop_accel(const PendulumParams& p, const GainPair& k, const TorqueLimit& lim,
                                State x) {
    return open_loop_accel(p, x, saturate(k.torque(x), lim));
}

/**
 * @brief Total energy relative to the upright rest state.
 *
 * E(x) - E(0) with E = m g l cos(theta) + 1/2 m l^2 omega^2, so the hanging
 * rest state sits at -2 m g l. The kinetic term enters with a plus sign
 * (physical energy difference).
 */
inline double energy_difference(const PendulumParams& p, State x) {
    return p.gravity_torque_max() * (std::cos(x.theta) - 1.0) + 0.5 * p.inertia() * x.omega * x.omega;
}

} // namespace pendroa

#endif // PENDROA_MODEL_HPP
