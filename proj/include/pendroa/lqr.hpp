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

#ifndef PENDROA_LQR_HPP
#define PENDROA_LQR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pendroa/model.hpp"

namespace pendroa {

/// x' = A x + B u around the upright equilibrium.
struct LinearModel {
    Eigen::Matrix2d A;
    Eigen::Vector2d B;
};

inline LinearModel linearize(const PendulumParams& p) {
    LinearModel lin;
    lin.A << 0.0, 1.0, p.gravity / p.length, -p.damping / p.inertia();
    lin.B << 0.0, 1.0 / p.inertia();
    return lin;
}

/// Diagonal state cost diag(q0, q1) and scalar input cost r.
struct CostWeights {
    double q0 = 1.0;
    double q1 = 1.0;
    double r = 1.0;

    [[nodiscard]] Eigen::Matrix2d Q() const { return Eigen::Vector2d(q0, q1).asDiagonal(); }
};

struct LqrSolution {
    Eigen::Matrix2d S;        ///< cost-to-go, symmetric positive (semi)definite
    GainPair K;               ///< K = R^-1 B^T S
    Eigen::Matrix2d Q;
    double R = 1.0;
    double riccati_residual = 0.0; ///< scaled max-abs residual of the CARE
};

/// Max-abs CARE residual S A + A^T S - S B R^-1 B^T S + Q, divided by the
/// largest term magnitude (at least 1).
inline double care_residual(const Eigen::Matrix2d& A, const Eigen::Vector2d& B,
                            const Eigen::Matrix2d& Q, double R, const Eigen::Matrix2d& S) {
    const Eigen::Matrix2d SA = S * A;
    const Eigen::Matrix2d quad = S * B * B.transpose() * S / R;
    const Eigen::Matrix2d res = SA + SA.transpose() - quad + Q;
    const double scale = std::max({1.0, SA.cwiseAbs().maxCoeff(), quad.cwiseAbs().maxCoeff(),
                                   Q.cwiseAbs().maxCoeff()});
    return res.cwiseAbs().maxCoeff() / scale;
}

namespace detail {

// Nonnegative root of (beta2/r) s^2 - 2 p s - c = 0, c >= 0, without
// cancellation for either sign of p.
inline double care_positive_root(double p, double c, double beta2_over_r) {
    const double disc = std::sqrt(p * p + c * beta2_over_r);
    if (p >= 0.0) return (p + disc) / beta2_over_r;
    return c / (disc - p);
}

inline bool is_companion(const Eigen::Matrix2d& A, const Eigen::Vector2d& B) {
    return A(0, 0) == 0.0 && A(0, 1) == 1.0 && B(0) == 0.0 && B(1) != 0.0;
}

// Symmetric 2x2 M is PSD iff both diagonal entries and det(M) are >= 0.
inline bool is_psd(const Eigen::Matrix2d& M, double tol) {
    const double off = 0.5 * (M(0, 1) + M(1, 0));
    return M(0, 0) >= -tol && M(1, 1) >= -tol && M(0, 0) * M(1, 1) - off * off >= -tol * tol;
}

} // namespace detail

/**
 * Closed-form stabilizing CARE solution for A = [[0, 1], [a, d]],
 * B = [0, beta]. The (0,0) and (1,1) entries of the Riccati equation are
 * scalar quadratics in S(0,1) and S(1,1) respectively; S(0,0) then follows
 * linearly from the off-diagonal entry.
 */
inline Eigen::Matrix2d solve_care_companion(const Eigen::Matrix2d& A, const Eigen::Vector2d& B,
                                            const Eigen::Matrix2d& Q, double R) {
    if (!detail::is_companion(A, B))
        throw NumericFailure("solve_care_companion: A, B not in companion form");
    const double a = A(1, 0);
    const double d = A(1, 1);
    const double beta = B(1);
    const double g = beta * beta / R;

    const double s01 = detail::care_positive_root(a, Q(0, 0), g);
    const double s11 = detail::care_positive_root(d, 2.0 * s01 + Q(1, 1), g);
    const double s00 = g * s01 * s11 - d * s01 - a * s11 - Q(0, 1);

    Eigen::Matrix2d S;
    S << s00, s01, s01, s11;
    return S;
}

/// Hamiltonian eigenvector method: S = U2 U1^-1 from the stable invariant
/// subspace [U1; U2] of [[A, -B R^-1 B^T], [-Q, -A^T]].
inline Eigen::Matrix2d solve_care_hamiltonian(const Eigen::Matrix2d& A, const Eigen::Vector2d& B,
                                              const Eigen::Matrix2d& Q, double R) {
    Eigen::Matrix4d H;
    H << A, -B * B.transpose() / R, -Q, -A.transpose();
    Eigen::EigenSolver<Eigen::Matrix4d> es(H);
    if (es.info() != Eigen::Success)
        throw NumericFailure("solve_care_hamiltonian: eigen-decomposition did not converge");

    Eigen::Matrix<std::complex<double>, 4, 2> stable;
    int count = 0;
    for (int i = 0; i < 4; ++i) {
        if (es.eigenvalues()(i).real() < 0.0) {
            if (count == 2) break;
            stable.col(count++) = es.eigenvectors().col(i);
        }
    }
    if (count != 2)
        throw NumericFailure("solve_care_hamiltonian: Hamiltonian has eigenvalues on the imaginary axis");

    const Eigen::Matrix2cd U1 = stable.topRows<2>();
    const Eigen::Matrix2cd U2 = stable.bottomRows<2>();
    Eigen::FullPivLU<Eigen::Matrix2cd> lu(U1);
    if (!lu.isInvertible())
        throw NumericFailure("solve_care_hamiltonian: stable subspace is not a graph (not stabilizable)");
    const Eigen::Matrix2d S = (U2 * lu.inverse()).real();
    return 0.5 * (S + S.transpose());
}

/**
 * @brief Continuous-time LQR for a two-state, single-input system.
 *
 * Companion-form systems (every pendulum linearization) use the closed form;
 * anything else goes through the Hamiltonian eigenvector method. The result
 * is checked against the Riccati residual, semidefiniteness of S, and
 * Hurwitz stability of A - B K; violations throw NumericFailure.
 */
inline LqrSolution solve_lqr(const Eigen::Matrix2d& A, const Eigen::Vector2d& B,
                             const Eigen::Matrix2d& Q, double R) {
    if (!A.allFinite() || !B.allFinite() || !Q.allFinite() || !std::isfinite(R))
        throw std::invalid_argument("solve_lqr: non-finite input");
    if (!(R > 0.0)) throw std::invalid_argument("solve_lqr: R must be > 0");
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, Q.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("solve_lqr: Q must be symmetric");
    if (!detail::is_psd(Q, 0.0))
        throw std::invalid_argument("solve_lqr: Q must be positive semidefinite");

    LqrSolution sol;
    sol.S = detail::is_companion(A, B) ? solve_care_companion(A, B, Q, R)
                                       : solve_care_hamiltonian(A, B, Q, R);
    sol.Q = Q;
    sol.R = R;
    if (!sol.S.allFinite()) throw NumericFailure("solve_lqr: non-finite Riccati solution");

    const Eigen::RowVector2d k = B.transpose() * sol.S / R;
    sol.K = {k(0), k(1)};
    sol.riccati_residual = care_residual(A, B, Q, R, sol.S);

    if (!(sol.riccati_residual < 1e-9))
        throw NumericFailure("solve_lqr: Riccati residual " + std::to_string(sol.riccati_residual) +
                             " exceeds 1e-9");
    if (!detail::is_psd(sol.S, 1e-12 * std::max(1.0, sol.S.cwiseAbs().maxCoeff())))
        throw NumericFailure("solve_lqr: Riccati solution is not positive semidefinite");

    const Eigen::Matrix2d Acl = A - B * k;
    if (!(Acl.trace() < 0.0 && Acl.determinant() > 0.0))
        throw NumericFailure("solve_lqr: closed loop A - B K is not Hurwitz");
    return sol;
}

inline LqrSolution solve_lqr(const PendulumParams& p, const CostWeights& w = {}) {
    const LinearModel lin = linearize(p);
    return solve_lqr(lin.A, lin.B, w.Q(), w.r);
}

/// x^T S x
inline double cost_to_go(const LqrSolution& sol, State x) {
    return sol.S(0, 0) * x.theta * x.theta + 2.0 * sol.S(0, 1) * x.theta * x.omega +
           sol.S(1, 1) * x.omega * x.omega;
}

/**
 * Roots of kappa^2 + ((K1 + b)/ml^2) kappa + (K0/ml^2 - g/l) = 0, i.e. the
 * eigenvalues of the linearized closed loop. kappa0 is the + branch.
 */
struct ClosedLoopSpectrum {
    double kappa0 = 0.0;
    double kappa1 = 0.0;
    double discriminant_d = 0.0;

    [[nodiscard]] double sqrt_d() const { return std::sqrt(discriminant_d); }
};

/// Throws NumericFailure unless D > 0 and both roots are strictly negative.
inline ClosedLoopSpectrum closed_loop_spectrum(const PendulumParams& p, const GainPair& k) {
    const double sum = (k.k1 + p.damping) / p.inertia();             // -(kappa0 + kappa1)
    const double prod = k.k0 / p.inertia() - p.gravity / p.length;  // kappa0 * kappa1
    const double d = sum * sum - 4.0 * prod;
    if (!std::isfinite(d)) throw NumericFailure("closed_loop_spectrum: non-finite discriminant");
    if (!(d > 0.0))
        throw NumericFailure("closed_loop_spectrum: discriminant D = " + std::to_string(d) +
                             " <= 0 (oscillatory closed loop is not supported)");
    if (!(prod > 0.0) || !(sum > 0.0))
        throw NumericFailure("closed_loop_spectrum: closed-loop root is not strictly negative");

    // Large-magnitude root first, the other from the product, so that
    // neither suffers cancellation.
    const double big = -0.5 * (sum + std::sqrt(d));
    ClosedLoopSpectrum spec;
    spec.kappa1 = big;
    spec.kappa0 = prod / big;
    spec.discriminant_d = d;
    return spec;
}

} // namespace pendroa

#endif // PENDROA_LQR_HPP
