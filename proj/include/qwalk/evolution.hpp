// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qwalk/schedule.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Multiplies every coin off-diagonal entry <x,+|rho|y,-> (and conjugate) by kappa.
/// Equivalent to the Kraus pair {sqrt((1+k)/2) 1, sqrt((1-k)/2) Z}, so it is CPTP for |kappa| <= 1.
JointState apply_coin_dephasing(const JointState& s, double kappa);

/// Operator-sum form {sqrt(k) 1, sqrt(1-k) P+, sqrt(1-k) P-}; only defined for 0 <= kappa <= 1.
JointState apply_coin_dephasing_kraus(const JointState& s, double kappa);

/// sum_i (1 (x) K_i) rho (1 (x) K_i)^dagger for arbitrary coin Kraus operators.
JointState apply_coin_channel(const JointState& s, std::span<const Eigen::Matrix2cd> kraus);

/// rho <- U rho U^dagger with U = F (1 (x) H): Hadamard coin, then |+> steps right and |-> left.
/// Throws HorizonExceeded once t reaches the window half-width.
JointState apply_walk_unitary(const JointState& s);

/// Dephasing with kappa(t + 1), then the walk unitary.
JointState step(const JointState& s, const DrivingSchedule& schedule);

struct StepRecord {
  int t = 0;
  double kappa = 1.0;
  double mean = 0.0;
  double variance = 0.0;
  double entropy = 0.0;
};

/// Worst-case invariant violations seen along a trajectory.
struct InvariantReport {
  double max_trace_defect = 0.0;
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  int eigen_checks = 0;
  int steps_checked = 0;

  void merge(const InvariantReport& other);
};

struct EvolveOptions {
  std::set<int> snapshot_times;
  bool keep_distributions = false;
  /// Check trace and Hermiticity at every step.
  bool check_invariants = false;
  /// Full spectrum check every n-th step (0 disables).
  int eigen_check_stride = 0;
};

struct Trajectory {
  std::string schedule_label;
  std::vector<StepRecord> records;  // t = 0 .. horizon
  std::vector<PositionDistribution> distributions;
  std::map<int, JointState> snapshots;
  InvariantReport invariants;
  std::optional<JointState> final_state;

  std::vector<double> variances() const;
  std::vector<double> entropies() const;
};

/// Runs `horizon` steps from `initial`. Throws ConfigError when the horizon
/// would leave the window.
Trajectory evolve(const JointState& initial, const DrivingSchedule& schedule, int horizon,
                  const EvolveOptions& options = {});

/// Convenience: evolve from the localized state with window half-width = horizon.
Trajectory evolve_from_origin(const CoinSpec& coin, const DrivingSchedule& schedule, int horizon,
                              const EvolveOptions& options = {});

}  // namespace qwalk
