// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <vector>

#include "qwalk/schedule.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Rank-one coin projectors B0 = (1 + n.sigma)/2, B1 = (1 - n.sigma)/2 with
/// Bloch direction n = (sin theta cos phi, sin theta sin phi, cos theta).
struct CoinMeasurement {
  double theta = 0;
  double phi = 0;

  /// The (|+>, |->) basis.
  static CoinMeasurement computational() { return {0.0, 0.0}; }
  /// Outcome vectors b0, b1 with B_j = |b_j><b_j|.
  std::array<Eigen::Vector2cd, 2> vectors() const;
  std::array<Eigen::Matrix2cd, 2> projectors() const;
};

struct OptimizerConfig {
  /// theta in [0, pi/2] sampled at grid+1 points, phi in [0, 2 pi) at grid points.
  int grid = 24;
  bool refine = true;
  int max_iterations = 400;
  double tolerance = 1e-6;  // bits
};

struct ClassicalCorrelation {
  double bits = 0;
  CoinMeasurement argmax;
  bool converged = true;
};

struct CorrelationRecord {
  int t = 0;
  double mutual_info = 0;
  double classical_corr = 0;
  double discord = 0;
  double mid = 0;
  CoinMeasurement argmax;
  bool optimizer_warning = false;
  /// MID measured in the (|+>, |->) basis because the coin marginal was degenerate.
  bool mid_fallback = false;
};

/// sum_j p_j S(rho_j) with rho_j the normalized walker state after outcome j.
double conditional_entropy(const JointState& s, const CoinMeasurement& m);

/// S(rho_w) - S(rho | {B_j})
double measured_mutual_information(const JointState& s, const CoinMeasurement& m);

/// S(rho_w) + S(rho_c) - S(rho_wc)
double mutual_information(const JointState& s);

/// sup over coin measurements of the measured mutual information: grid search then Nelder-Mead.
ClassicalCorrelation classical_correlation(const JointState& s, const OptimizerConfig& config = {});

/// I - C_cl, with optimizer slack down to -1e-6 clamped to zero.
double quantum_discord(const JointState& s, const OptimizerConfig& config = {});

struct MidResult {
  double bits = 0;
  CoinMeasurement basis;
  bool fallback = false;
};

/// I - I(measured in the eigenbasis of rho_c); falls back to (|+>, |->) when that basis is degenerate.
MidResult measurement_induced_disturbance(const JointState& s);

CorrelationRecord correlation_record(const JointState& s, const OptimizerConfig& config = {});

/// Records at t = 0, stride, 2 stride, ... <= horizon for the walk started in `coin` at the origin.
std::vector<CorrelationRecord> correlation_trajectory(const DrivingSchedule& schedule, int horizon, int stride,
                                                      const CoinSpec& coin = CoinSpec::symmetric(),
                                                      const OptimizerConfig& config = {});

}  // namespace qwalk
