// SPDX-License-Identifier: Apache-2.0
#include "qwalk/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {
namespace {

void check_kappa(double kappa) {
  if (!(std::abs(kappa) <= 1.0)) {
    throw ContractViolation("coin dephasing: |kappa| must not exceed 1");
  }
}

// m <- (1 (x) K) m (1 (x) K)^dagger, blockwise.
ComplexMatrix conjugate_by_coin(const ComplexMatrix& m, const Eigen::Matrix2cd& k) {
  const Eigen::Index d = m.rows();
  ComplexMatrix left(d, d);
  for (Eigen::Index i = 0; i < d; i += 2) {
    left.middleRows<2>(i).noalias() = k * m.middleRows<2>(i);
  }
  ComplexMatrix out(d, d);
  const Eigen::Matrix2cd kh = k.adjoint();
  for (Eigen::Index j = 0; j < d; j += 2) {
    out.middleCols<2>(j).noalias() = left.middleCols<2>(j) * kh;
  }
  return out;
}

}  // namespace

JointState apply_coin_dephasing(const JointState& s, double kappa) {
  check_kappa(kappa);
  ComplexMatrix rho = s.rho();
  if (kappa != 1.0) {
    const Eigen::Index d = rho.rows();
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index i = (j + 1) % 2; i < d; i += 2) rho(i, j) *= kappa;
    }
  }
  return JointState(s.half_width(), s.time(), std::move(rho));
}

JointState apply_coin_channel(const JointState& s, std::span<const Eigen::Matrix2cd> kraus) {
  ComplexMatrix acc = ComplexMatrix::Zero(s.dimension(), s.dimension());
  for (const auto& k : kraus) acc += conjugate_by_coin(s.rho(), k);
  return JointState(s.half_width(), s.time(), std::move(acc));
}

JointState apply_coin_dephasing_kraus(const JointState& s, double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw ContractViolation("apply_coin_dephasing_kraus: operator-sum form needs 0 <= kappa <= 1");
  }
  const double a0 = std::sqrt(kappa);
  const double a1 = std::sqrt(1.0 - kappa);
  Eigen::Matrix2cd k0 = a0 * Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd kp = Eigen::Matrix2cd::Zero();
  Eigen::Matrix2cd km = Eigen::Matrix2cd::Zero();
  kp(0, 0) = a1;
  km(1, 1) = a1;
  const std::array<Eigen::Matrix2cd, 3> ops{k0, kp, km};
  return apply_coin_channel(s, ops);
}

JointState apply_walk_unitary(const JointState& s) {
  if (s.time() >= s.half_width()) {
    throw HorizonExceeded("apply_walk_unitary: step " + std::to_string(s.time() + 1) +
                          " would leave the window of half-width " + std::to_string(s.half_width()));
  }
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix m = s.rho();
  const Eigen::Index d = m.rows();

  // Hadamard on the coin, from the left and then from the right (H is real symmetric).
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; i += 2) {
      const Complex a = m(i, j);
      const Complex b = m(i + 1, j);
      m(i, j) = r * (a + b);
      m(i + 1, j) = r * (a - b);
    }
  }
  for (Eigen::Index j = 0; j < d; j += 2) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const Complex a = m(i, j);
      const Complex b = m(i, j + 1);
      m(i, j) = r * (a + b);
      m(i, j + 1) = r * (a - b);
    }
  }

  // Conditional shift: |x,+> -> |x+1,+>, |x,-> -> |x-1,->.
  std::vector<Eigen::Index> source(static_cast<size_t>(d), -1);
  for (Eigen::Index i = 0; i < d; ++i) {
    const Eigen::Index from = (i % 2 == 0) ? i - 2 : i + 2;
    if (from >= 0 && from < d) source[static_cast<size_t>(i)] = from;
  }
  ComplexMatrix out(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Eigen::Index sj = source[static_cast<size_t>(j)];
    for (Eigen::Index i = 0; i < d; ++i) {
      const Eigen::Index si = source[static_cast<size_t>(i)];
      out(i, j) = (si < 0 || sj < 0) ? Complex(0.0, 0.0) : m(si, sj);
    }
  }
  return JointState(s.half_width(), s.time() + 1, std::move(out));
}

JointState step(const JointState& s, const DrivingSchedule& schedule) {
  return apply_walk_unitary(apply_coin_dephasing(s, kappa_at(schedule, s.time() + 1)));
}

void InvariantReport::merge(const InvariantReport& o) {
  max_trace_defect = std::max(max_trace_defect, o.max_trace_defect);
  max_hermiticity_defect = std::max(max_hermiticity_defect, o.max_hermiticity_defect);
  min_eigenvalue = std::min(min_eigenvalue, o.min_eigenvalue);
  eigen_checks += o.eigen_checks;
  steps_checked += o.steps_checked;
}

std::vector<double> Trajectory::variances() const {
  std::vector<double> v;
  v.reserve(records.size());
  for (const auto& r : records) v.push_back(r.variance);
  return v;
}

std::vector<double> Trajectory::entropies() const {
  std::vector<double> v;
  v.reserve(records.size());
  for (const auto& r : records) v.push_back(r.entropy);
  return v;
}

Trajectory evolve(const JointState& initial, const DrivingSchedule& schedule, int horizon,
                  const EvolveOptions& options) {
  if (horizon < 0) throw ConfigError("evolve: negative horizon");
  if (initial.time() + horizon > initial.half_width()) {
    throw ConfigError("evolve: horizon " + std::to_string(horizon) + " exceeds the window half-width " +
                      std::to_string(initial.half_width()));
  }
  Trajectory traj;
  traj.schedule_label = describe(schedule);
  traj.records.reserve(static_cast<size_t>(horizon) + 1);

  JointState state = initial;
  auto record = [&](const JointState& st, double kappa) {
    const PositionDistribution p = position_distribution(st);
    const MomentSet ms = moments(p);
    traj.records.push_back({st.time(), kappa, ms.m1, ms.variance, position_entropy(p)});
    if (options.keep_distributions) traj.distributions.push_back(p);
    if (options.snapshot_times.contains(st.time())) traj.snapshots.emplace(st.time(), st);
    if (options.check_invariants) {
      const int steps = st.time() - initial.time();
      const bool spectral = options.eigen_check_stride > 0 && steps % options.eigen_check_stride == 0;
      const StateDiagnostics d = diagnose(st, spectral);
      auto& inv = traj.invariants;
      inv.max_trace_defect = std::max(inv.max_trace_defect, d.trace_defect);
      inv.max_hermiticity_defect = std::max(inv.max_hermiticity_defect, d.hermiticity_defect);
      inv.steps_checked += 1;
      if (d.eigenvalues_checked) {
        inv.min_eigenvalue = std::min(inv.min_eigenvalue, d.min_eigenvalue);
        inv.eigen_checks += 1;
      }
    }
  };

  record(state, kappa_at(schedule, state.time()));
  for (int i = 0; i < horizon; ++i) {
    const double kappa = kappa_at(schedule, state.time() + 1);
    state = apply_walk_unitary(apply_coin_dephasing(state, kappa));
    record(state, kappa);
  }
  traj.final_state = std::move(state);
  return traj;
}

Trajectory evolve_from_origin(const CoinSpec& coin, const DrivingSchedule& schedule, int horizon,
                              const EvolveOptions& options) {
  return evolve(initial_state(coin, std::max(horizon, 1)), schedule, horizon, options);
}

}  // namespace qwalk
