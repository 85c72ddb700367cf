// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qwalk/schedule.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk::momentum {

/// U(k) = D(k) H with D(k) = diag(e^{-ik}, e^{ik}); the walk restricted to the plane wave
/// sum_x e^{ikx}|x>.
struct MomentumCoinOp {
  double k = 0;
  Eigen::Matrix2cd matrix;
};

MomentumCoinOp coin_step_matrix(double k);

/**
 * Eigenpairs of U(k). theta0 is the eigenphase of the eigenvalue with positive
 * real part (in (-pi/2, pi/2)), theta1 = pi - theta0 wrapped to (-pi, pi].
 * Eigenvectors are normalized with a real positive first component.
 */
struct EigenSystemK {
  double k = 0;
  std::array<double, 2> theta{};
  std::array<Eigen::Vector2cd, 2> phi;
};

EigenSystemK eigensystem(double k);

/// U(k) [kappa O + (1 - kappa)(P+ O P+ + P- O P-)] U(k')^dagger
Eigen::Matrix2cd superoperator_apply(const Eigen::Matrix2cd& op, double k, double k_prime, double kappa);

/// Coefficients r of O = r1 1 + r2 X + r3 Y + r4 Z (complex for non-Hermitian O).
struct PauliVector {
  Eigen::Vector4cd r = Eigen::Vector4cd::Zero();

  static PauliVector from_matrix(const Eigen::Matrix2cd& op);
  Eigen::Matrix2cd to_matrix() const;
};

/**
 * kappa = 0 map L(k,k) in the Pauli coefficient basis:
 *   rows (1,0,0,0 / 0,0,0,cos 2k / 0,0,0,sin 2k / 0,0,0,0).
 * Measurement keeps only 1 and Z; H maps Z to X; the shift phase rotates X towards Y.
 */
Eigen::Matrix4d rw_transfer_matrix(double k);

struct MomentPoint {
  int t = 0;
  double mean = 0;
  double second = 0;
};

struct MomentSeries {
  std::vector<MomentPoint> points;  // t = 0 .. horizon
  int quadrature_points = 0;
  /// Largest change of either moment when the quadrature grid is doubled.
  double convergence_delta = 0;
  bool converged = true;
  std::string warning;
};

struct ExactMomentOptions {
  CoinSpec coin = CoinSpec::symmetric();
  /// Recompute with twice the grid and compare (tolerance 1e-8).
  bool check_convergence = true;
};

/**
 * @brief Exact <x>(t) and <x^2>(t) from the momentum-space superoperator.
 *
 * For each k on a uniform periodic grid, the coin operator is propagated with
 * the time-ordered product L(kappa(j)) ... L(kappa(1)) and
 *   <x>   = int dk/2pi sum_j Tr{Z rho_j(k)}
 *   <x^2> = int dk/2pi sum_j [ sum_{j'<=j} Tr{Z L^{j<-j'}(Z rho_j')} + sum_{j'<j} Tr{Z L^{j<-j'}(rho_j' Z)} ]
 * where rho_j = L^{(j)} rho_c and L^{j<-j'} propagates from step j'+1 to j.
 * Integrands are trigonometric polynomials of degree <= 2t, so the trapezoid
 * rule is exact once the grid has more than 2t points.
 */
MomentSeries exact_moments(const DrivingSchedule& schedule, int horizon, int quadrature_points,
                           const ExactMomentOptions& options = {});

}  // namespace qwalk::momentum
