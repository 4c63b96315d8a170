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

#ifndef PENDROA_ROA_LYAPUNOV_HPP
#define PENDROA_ROA_LYAPUNOV_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "pendroa/lqr.hpp"
#include "pendroa/model.hpp"
#include "pendroa/random.hpp"

namespace pendroa {

/// d/dt (x^T S x) = 2 x^T S f(x) along the saturated closed loop.
inline double lyapunov_rate(const Eigen::Matrix2d& S, const PendulumParams& p, const GainPair& k,
                            const TorqueLimit& lim, State x) {
    const double theta_dot = x.omega;
    const double omega_dot = closed_loop_accel(p, k, lim, x);
    const double s_theta = S(0, 0) * x.theta + S(0, 1) * x.omega;
    const double s_omega = S(0, 1) * x.theta + S(1, 1) * x.omega;
    return 2.0 * (s_theta * theta_dot + s_omega * omega_dot);
}

/// Sublevel set {x : x^T S x <= rho} of the LQR cost-to-go.
class LyapunovOracle {
public:
    LyapunovOracle(const Eigen::Matrix2d& s_matrix, double rho, std::size_t sample_count,
                   const SampleDomain& domain, std::uint64_t seed)
        : s_(s_matrix), rho_(rho), sample_count_(sample_count), domain_(domain), seed_(seed) {
        if (!(rho > 0.0) || !std::isfinite(rho))
            throw std::invalid_argument("LyapunovOracle: rho must be finite and > 0");
    }

    [[nodiscard]] double value(State x) const {
        return s_(0, 0) * x.theta * x.theta + 2.0 * s_(0, 1) * x.theta * x.omega +
               s_(1, 1) * x.omega * x.omega;
    }

    [[nodiscard]] bool contains(State x) const { return value(x) <= rho_; }

    /// pi rho / sqrt(det S)
    [[nodiscard]] double ellipse_area() const {
        return std::numbers::pi * rho_ / std::sqrt(s_.determinant());
    }

    [[nodiscard]] const Eigen::Matrix2d& s_matrix() const { return s_; }
    [[nodiscard]] double rho() const { return rho_; }
    [[nodiscard]] std::size_t sample_count() const { return sample_count_; }
    [[nodiscard]] const SampleDomain& domain() const { return domain_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

private:
    Eigen::Matrix2d s_;
    double rho_;
    std::size_t sample_count_;
    SampleDomain domain_;
    std::uint64_t seed_;
};

/**
 * @brief Largest sampled-certified sublevel set of the cost-to-go.
 *
 * rho starts at the largest x^T S x over the corners of @p domain. Each of the
 * @p n samples is drawn uniformly inside the current set {x^T S x <= rho};
 * when the decrease condition fails there (V' >= 0 away from the origin),
 * rho shrinks to just below that sample's V. Deterministic per seed.
 */
inline LyapunovOracle build_lyapunov_oracle(const LqrSolution& sol, const PendulumParams& p,
                                            const TorqueLimit& lim, std::size_t n,
                                            const SampleDomain& domain = {},
                                            std::uint64_t seed = 0) {
    if (n == 0) throw std::invalid_argument("build_lyapunov_oracle: sample count must be >= 1");
    domain.validate();

    const Eigen::Matrix2d& S = sol.S;
    Eigen::LLT<Eigen::Matrix2d> llt(S);
    if (llt.info() != Eigen::Success || !(S.determinant() > 0.0))
        throw NumericFailure("build_lyapunov_oracle: S must be positive definite");
    // x = T z maps the unit disk onto {x^T S x <= 1}: T = L^-T with S = L L^T.
    const Eigen::Matrix2d T = llt.matrixU().solve(Eigen::Matrix2d::Identity());

    auto V = [&](State x) {
        return S(0, 0) * x.theta * x.theta + 2.0 * S(0, 1) * x.theta * x.omega +
               S(1, 1) * x.omega * x.omega;
    };
    double rho = 0.0;
    for (double th : {domain.theta_min, domain.theta_max})
        for (double om : {domain.omega_min, domain.omega_max}) rho = std::max(rho, V({th, om}));

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double radius = std::sqrt(rng.uniform01() * rho);
        const double angle = 2.0 * std::numbers::pi * rng.uniform01();
        const Eigen::Vector2d x = T * Eigen::Vector2d(radius * std::cos(angle), radius * std::sin(angle));
        const State s{x(0), x(1)};
        if (std::hypot(s.theta, s.omega) <= 1e-9) continue;
        if (lyapunov_rate(S, p, sol.K, lim, s) >= 0.0) rho = std::min(rho, std::nextafter(V(s), 0.0));
    }
    return LyapunovOracle(S, rho, n, domain, seed);
}

} // namespace pendroa

#endif // PENDROA_ROA_LYAPUNOV_HPP
