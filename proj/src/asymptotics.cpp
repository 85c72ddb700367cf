// SPDX-License-Identifier: Apache-2.0
#include "qwalk/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk::asymptotics {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

double inverse_lorentz_average(int n_k) {
  // Offset grid; the integrand is smooth and periodic so either grid is spectrally accurate.
  double acc = 0;
  for (int i = 0; i < n_k; ++i) {
    const double k = -pi + 2.0 * pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n_k);
    const double c = std::cos(k);
    acc += 1.0 / (1.0 + c * c);
  }
  return acc / static_cast<double>(n_k);
}

// Root of g(k) = cos k / sqrt(1 + cos^2 k) + alpha on (0, pi); g decreases monotonically there.
double stationary_point(double alpha, int n_k) {
  auto g = [alpha](double k) {
    const double c = std::cos(k);
    return c / std::sqrt(1.0 + c * c) + alpha;
  };
  const double h = pi / static_cast<double>(n_k);
  double lo = 0.0;
  double hi = pi;
  for (int i = 0; i < n_k; ++i) {
    const double a = h * static_cast<double>(i) + 0.5 * h;
    const double b = a + h;
    if (g(a) >= 0.0 && g(std::min(b, pi)) <= 0.0) {
      lo = a;
      hi = std::min(b, pi);
      break;
    }
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double profile(int x, int t, int n_k) {
  if (((x + t) % 2 + 2) % 2 != 0) return 0.0;
  const double alpha = static_cast<double>(x) / static_cast<double>(t);
  if (std::abs(alpha) >= 1.0 / sqrt2) return 0.0;
  const double k = stationary_point(alpha, n_k);
  const double s = std::sin(k);
  if (std::abs(s) < 1e-6) return 0.0;
  const double c = std::cos(k);
  const double curvature = s / std::pow(1.0 + c * c, 1.5);
  const double phase = std::asin(s / sqrt2) * static_cast<double>(t);
  const double a = std::cos(phase + static_cast<double>(x) * k - pi / 4.0);
  const double b = std::cos(phase + static_cast<double>(x - 1) * k - pi / 4.0);
  const double bracket = (1.0 - alpha) * (1.0 - alpha) * a * a + (1.0 - alpha * alpha) * b * b;
  return 2.0 / (pi * static_cast<double>(t) * curvature) * bracket;
}

PositionDistribution blend(const PositionDistribution& q, const PositionDistribution& r, double w) {
  PositionDistribution out;
  out.x_min = std::min(q.x_min, r.x_min);
  const int hi = std::max(q.x_max(), r.x_max());
  for (int x = out.x_min; x <= hi; ++x) out.probabilities.push_back(w * q.at(x) + (1.0 - w) * r.at(x));
  return out;
}

}  // namespace

BallisticConstants ballistic_constants(int quadrature_points) {
  if (quadrature_points < 256) throw ContractViolation("ballistic_constants: need at least 256 points");
  BallisticConstants c;
  // C1 and C2 reduce to the same integral.
  c.c1 = 1.0 - inverse_lorentz_average(quadrature_points);
  c.c2 = 1.0 - inverse_lorentz_average(quadrature_points);
  c.variance_coefficient = c.c2 - c.c1 * c.c1;
  c.analytic = 1.0 - 1.0 / sqrt2;
  return c;
}

double asymptotic_quantum_variance(int t) {
  const double c = 1.0 - 1.0 / sqrt2;
  const double td = static_cast<double>(t);
  return td * td * (c - c * c);
}

AsymptoticDistribution asymptotic_quantum_distribution(int t, int quadrature_points, CoinSymmetry coin) {
  if (t < 20) throw ContractViolation("asymptotic_quantum_distribution: needs t >= 20");
  if (quadrature_points < 8 * t) {
    throw ContractViolation("asymptotic_quantum_distribution: quadrature grid must have >= 8 t points");
  }
  AsymptoticDistribution out;
  auto& p = out.distribution;
  p.x_min = -t;
  p.probabilities.assign(static_cast<size_t>(2 * t + 1), 0.0);
  for (int x = -t; x <= t; ++x) {
    double v = 0;
    switch (coin) {
      case CoinSymmetry::biased:
        v = profile(-x, t, quadrature_points);
        break;
      case CoinSymmetry::symmetric:
        v = 0.5 * (profile(x, t, quadrature_points) + profile(-x, t, quadrature_points));
        break;
    }
    p.probabilities[static_cast<size_t>(x + t)] = v;
  }
  const double total = p.sum();
  out.normalization_defect = std::abs(total - 1.0);
  out.regime_warning = out.normalization_defect > 0.05;
  if (total > 0) {
    for (auto& v : p.probabilities) v /= total;
  }
  return out;
}

PositionDistribution binomial_distribution(int t) {
  if (t < 0) throw ContractViolation("binomial_distribution: negative time");
  PositionDistribution p;
  p.x_min = -t;
  p.probabilities.assign(static_cast<size_t>(2 * t + 1), 0.0);
  if (t <= 30) {
    // Exact integer binomials fit in a double here.
    double c = 1.0;
    for (int m = 0; m <= t; ++m) {
      p.probabilities[static_cast<size_t>(2 * m)] = std::ldexp(c, -t);
      c = c * static_cast<double>(t - m) / static_cast<double>(m + 1);
    }
  } else {
    const double lt = std::lgamma(static_cast<double>(t) + 1.0) - static_cast<double>(t) * std::log(2.0);
    for (int m = 0; m <= t; ++m) {
      const double lg = lt - std::lgamma(static_cast<double>(m) + 1.0) - std::lgamma(static_cast<double>(t - m) + 1.0);
      p.probabilities[static_cast<size_t>(2 * m)] = std::exp(lg);
    }
  }
  return p;
}

PositionDistribution mixture_distribution(int t, double weight, int quadrature_points, CoinSymmetry coin) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw ContractViolation("mixture_distribution: weight outside [0, 1]");
  return signed_mixture_distribution(t, weight, quadrature_points, coin);
}

PositionDistribution signed_mixture_distribution(int t, double weight, int quadrature_points,
                                                 CoinSymmetry coin) {
  const PositionDistribution r = binomial_distribution(t);
  if (weight == 0.0) return r;
  const PositionDistribution q = asymptotic_quantum_distribution(t, quadrature_points, coin).distribution;
  if (weight == 1.0) return q;
  return blend(q, r, weight);
}

double mixture_variance(int t, double weight) {
  return weight * asymptotic_quantum_variance(t) + (1.0 - weight) * static_cast<double>(t);
}

double mixture_weight(const DrivingSchedule& schedule, int t, MixtureWeight mode) {
  const double k = kappa_at(schedule, t);
  return mode == MixtureWeight::abs_kappa ? std::abs(k) : k;
}

}  // namespace qwalk::asymptotics
