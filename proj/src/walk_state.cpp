// SPDX-License-Identifier: Apache-2.0
#include "qwalk/walk_state.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace qwalk {

CoinSpec CoinSpec::symmetric() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex(r, 0.0), Complex(0.0, r)};
}

CoinSpec CoinSpec::up() { return {Complex(1.0, 0.0), Complex(0.0, 0.0)}; }

CoinSpec CoinSpec::down() { return {Complex(0.0, 0.0), Complex(1.0, 0.0)}; }

CoinSpec CoinSpec::balanced() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex(r, 0.0), Complex(r, 0.0)};
}

double PositionDistribution::sum() const {
  return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

JointState::JointState(int half_width, int time, ComplexMatrix rho)
    : half_width_(half_width), time_(time), rho_(std::move(rho)) {
  if (half_width_ < 0 || time_ < 0) {
    throw ContractViolation("JointState: negative window or time");
  }
  const Eigen::Index d = 2 * static_cast<Eigen::Index>(sites());
  if (rho_.rows() != d || rho_.cols() != d) {
    throw ContractViolation("JointState: matrix dimension does not match the window");
  }
}

std::vector<int> JointState::occupied_positions() const {
  std::vector<int> out;
  for (int x = -half_width_; x <= half_width_; ++x) {
    const double w = rho_(index(x, Coin::plus), index(x, Coin::plus)).real() +
                     rho_(index(x, Coin::minus), index(x, Coin::minus)).real();
    if (w != 0.0) out.push_back(x);
  }
  return out;
}

JointState initial_state(const CoinSpec& coin, int half_width) {
  if (half_width < 1) throw ContractViolation("initial_state: window half-width must be >= 1");
  if (std::abs(coin.norm_squared() - 1.0) > 1e-12) {
    throw ContractViolation("initial_state: coin amplitudes are not normalized");
  }
  const Eigen::Index d = 2 * static_cast<Eigen::Index>(2 * half_width + 1);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  const Eigen::Vector2cd v = coin.vector();
  rho.block<2, 2>(2 * half_width, 2 * half_width) = v * v.adjoint();
  return JointState(half_width, 0, std::move(rho));
}

PositionDistribution position_distribution(const JointState& s) {
  PositionDistribution p;
  p.x_min = -s.half_width();
  p.probabilities.resize(static_cast<size_t>(s.sites()));
  const auto& rho = s.rho();
  for (int i = 0; i < s.sites(); ++i) {
    p.probabilities[static_cast<size_t>(i)] = rho(2 * i, 2 * i).real() + rho(2 * i + 1, 2 * i + 1).real();
  }
  return p;
}

Eigen::Matrix2cd reduced_coin(const JointState& s) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  const auto& rho = s.rho();
  for (int i = 0; i < s.sites(); ++i) out += rho.block<2, 2>(2 * i, 2 * i);
  return out;
}

ComplexMatrix reduced_walker(const JointState& s) {
  const int n = s.sites();
  const auto& rho = s.rho();
  ComplexMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  }
  return out;
}

ComplexMatrix restrict_to_positions(const JointState& s, const std::vector<int>& positions) {
  const auto m = static_cast<Eigen::Index>(positions.size());
  ComplexMatrix out(2 * m, 2 * m);
  const auto& rho = s.rho();
  for (Eigen::Index b = 0; b < m; ++b) {
    const Eigen::Index cb = s.index(positions[static_cast<size_t>(b)], Coin::plus);
    for (Eigen::Index a = 0; a < m; ++a) {
      const Eigen::Index ca = s.index(positions[static_cast<size_t>(a)], Coin::plus);
      out.block<2, 2>(2 * a, 2 * b) = rho.block<2, 2>(ca, cb);
    }
  }
  return out;
}

StateDiagnostics diagnose(const JointState& s, bool with_spectrum) {
  StateDiagnostics d;
  d.trace_defect = std::abs(s.rho().trace() - Complex(1.0, 0.0));
  d.hermiticity_defect = numerics::hermiticity_defect(s.rho());
  if (with_spectrum) {
    const ComplexMatrix sub = restrict_to_positions(s, s.occupied_positions());
    // Hermitian part only; the defect itself is reported separately.
    const ComplexMatrix herm = 0.5 * (sub + sub.adjoint());
    const RealVector ev = hermitian_eigenvalues(herm);
    // Dropped rows are exactly zero and contribute eigenvalue 0.
    d.min_eigenvalue = ev.size() > 0 ? ev.minCoeff() : 0.0;
    if (sub.rows() < s.dimension()) d.min_eigenvalue = std::min(d.min_eigenvalue, 0.0);
    d.eigenvalues_checked = true;
  }
  return d;
}

}  // namespace qwalk
