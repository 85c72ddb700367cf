// SPDX-License-Identifier: Apache-2.0
#include "qwalk/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk::momentum {
namespace {

using std::numbers::pi;

const Eigen::Matrix2cd& pauli_z() {
  static const Eigen::Matrix2cd z = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return z;
}

void check_kappa(double kappa) {
  if (!(std::abs(kappa) <= 1.0)) throw ContractViolation("superoperator: |kappa| must not exceed 1");
}

Eigen::Matrix2cd dephase(const Eigen::Matrix2cd& op, double kappa) {
  Eigen::Matrix2cd out = op;
  out(0, 1) *= kappa;
  out(1, 0) *= kappa;
  return out;
}

// Tr{Z A}
Complex trace_z(const Eigen::Matrix2cd& a) { return a(0, 0) - a(1, 1); }

struct RawMoments {
  std::vector<double> mean;
  std::vector<double> second;
};

RawMoments integrate(const std::vector<double>& kappas, int horizon, int n_k, const Eigen::Vector2cd& coin) {
  const Eigen::Matrix2cd rho_c = coin * coin.adjoint();
  const auto steps = static_cast<size_t>(horizon);
  std::vector<double> first_sum(steps + 1, 0.0);
  std::vector<double> second_sum(steps + 1, 0.0);

  std::vector<Eigen::Matrix2cd> prefix(steps + 1);
  std::vector<Complex> per_j(steps + 1);
  for (int i = 0; i < n_k; ++i) {
    const double k = -pi + 2.0 * pi * static_cast<double>(i) / static_cast<double>(n_k);
    const Eigen::Matrix2cd u = coin_step_matrix(k).matrix;
    const Eigen::Matrix2cd ud = u.adjoint();
    auto apply = [&](const Eigen::Matrix2cd& op, size_t j) -> Eigen::Matrix2cd {
      return u * dephase(op, kappas[j]) * ud;
    };

    prefix[0] = rho_c;
    for (size_t j = 1; j <= steps; ++j) prefix[j] = apply(prefix[j - 1], j);

    std::fill(per_j.begin(), per_j.end(), Complex(0.0, 0.0));
    for (size_t jp = 1; jp <= steps; ++jp) {
      Eigen::Matrix2cd left = pauli_z() * prefix[jp];
      Eigen::Matrix2cd right = prefix[jp] * pauli_z();
      per_j[jp] += trace_z(left);
      for (size_t j = jp + 1; j <= steps; ++j) {
        left = apply(left, j);
        right = apply(right, j);
        per_j[j] += trace_z(left) + trace_z(right);
      }
    }

    double acc1 = 0.0;
    double acc2 = 0.0;
    for (size_t j = 1; j <= steps; ++j) {
      acc1 += trace_z(prefix[j]).real();
      acc2 += per_j[j].real();
      first_sum[j] += acc1;
      second_sum[j] += acc2;
    }
  }
  const double w = 1.0 / static_cast<double>(n_k);
  for (auto& v : first_sum) v *= w;
  for (auto& v : second_sum) v *= w;
  return {std::move(first_sum), std::move(second_sum)};
}

}  // namespace

MomentumCoinOp coin_step_matrix(double k) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex em = std::polar(r, -k);
  const Complex ep = std::polar(r, k);
  MomentumCoinOp op;
  op.k = k;
  op.matrix << em, em, ep, -ep;
  return op;
}

EigenSystemK eigensystem(double k) {
  const Eigen::Matrix2cd u = coin_step_matrix(k).matrix;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(u, true);
  EigenSystemK out;
  out.k = k;
  const Eigen::Vector2cd lambda = solver.eigenvalues();
  const int first = lambda(0).real() > lambda(1).real() ? 0 : 1;
  for (int l = 0; l < 2; ++l) {
    const int src = l == 0 ? first : 1 - first;
    Eigen::Vector2cd v = solver.eigenvectors().col(src).normalized();
    const double mag = std::abs(v(0));
    if (mag > 0) v *= std::conj(v(0)) / mag;
    v(0) = Complex(std::abs(v(0)), 0.0);
    out.phi[static_cast<size_t>(l)] = v;
    out.theta[static_cast<size_t>(l)] = std::arg(lambda(src));
  }
  return out;
}

Eigen::Matrix2cd superoperator_apply(const Eigen::Matrix2cd& op, double k, double k_prime, double kappa) {
  check_kappa(kappa);
  const Eigen::Matrix2cd u = coin_step_matrix(k).matrix;
  const Eigen::Matrix2cd up = coin_step_matrix(k_prime).matrix;
  return u * dephase(op, kappa) * up.adjoint();
}

PauliVector PauliVector::from_matrix(const Eigen::Matrix2cd& op) {
  PauliVector p;
  p.r(0) = 0.5 * (op(0, 0) + op(1, 1));
  p.r(1) = 0.5 * (op(0, 1) + op(1, 0));
  p.r(2) = 0.5 * Complex(0.0, 1.0) * (op(0, 1) - op(1, 0));
  p.r(3) = 0.5 * (op(0, 0) - op(1, 1));
  return p;
}

Eigen::Matrix2cd PauliVector::to_matrix() const {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << r(0) + r(3), r(1) - i * r(2), r(1) + i * r(2), r(0) - r(3);
  return m;
}

Eigen::Matrix4d rw_transfer_matrix(double k) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  m(1, 3) = std::cos(2.0 * k);
  m(2, 3) = std::sin(2.0 * k);
  return m;
}

MomentSeries exact_moments(const DrivingSchedule& schedule, int horizon, int quadrature_points,
                           const ExactMomentOptions& options) {
  if (horizon < 1) throw ContractViolation("exact_moments: horizon must be >= 1");
  if (quadrature_points < 256 || quadrature_points % 2 != 0) {
    throw ContractViolation("exact_moments: quadrature grid must be even and >= 256");
  }
  if (std::abs(options.coin.norm_squared() - 1.0) > 1e-12) {
    throw ContractViolation("exact_moments: coin amplitudes are not normalized");
  }
  std::vector<double> kappas(static_cast<size_t>(horizon) + 1, 1.0);
  for (int j = 1; j <= horizon; ++j) {
    kappas[static_cast<size_t>(j)] = kappa_at(schedule, j);
    check_kappa(kappas[static_cast<size_t>(j)]);
  }

  const RawMoments base = integrate(kappas, horizon, quadrature_points, options.coin.vector());
  MomentSeries out;
  out.quadrature_points = quadrature_points;
  for (int t = 0; t <= horizon; ++t) {
    const auto i = static_cast<size_t>(t);
    out.points.push_back({t, base.mean[i], base.second[i]});
  }

  if (options.check_convergence) {
    const RawMoments fine = integrate(kappas, horizon, 2 * quadrature_points, options.coin.vector());
    double delta = 0;
    for (size_t i = 0; i < base.mean.size(); ++i) {
      delta = std::max({delta, std::abs(fine.mean[i] - base.mean[i]), std::abs(fine.second[i] - base.second[i])});
    }
    out.convergence_delta = delta;
    if (delta > 1e-8) {
      out.converged = false;
      std::ostringstream msg;
      msg.precision(17);
      msg << "quadrature not converged: moments change by " << delta << " between " << quadrature_points
          << " and " << 2 * quadrature_points << " points (final <x^2> " << base.second.back() << " vs "
          << fine.second.back() << ")";
      out.warning = msg.str();
    }
  }
  return out;
}

}  // namespace qwalk::momentum
