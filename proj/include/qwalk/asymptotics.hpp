// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qwalk/schedule.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk::asymptotics {

/// Long-time constants of the Hadamard walk: <x>/t -> C1, <x^2>/t^2 -> C2 (biased coin).
struct BallisticConstants {
  double c1 = 0;
  double c2 = 0;
  double variance_coefficient = 0;  // C2 - C1^2
  double analytic = 0;              // 1 - 1/sqrt(2)
};

/// Both constants as 1 - int dk/2pi 1/(1 + cos^2 k) on a periodic trapezoid grid.
BallisticConstants ballistic_constants(int quadrature_points = 4096);

/// t^2 (C2 - C1^2) with the analytic constants.
double asymptotic_quantum_variance(int t);

enum class CoinSymmetry {
  /// (|+> + i|->)/sqrt(2): mirror average of the profile below.
  symmetric,
  /// Walk started in |+>: the profile below reflected, P(x) = f(-x).
  biased,
};

struct AsymptoticDistribution {
  PositionDistribution distribution;  // renormalized
  double normalization_defect = 0;    // |sum P - 1| before renormalization
  bool regime_warning = false;        // defect > 0.05
};

/**
 * @brief Stationary-phase long-time distribution of the unitary walk.
 *
 * For each site with x + t even and |x|/t < 1/sqrt(2) the profile is
 *   f(x) = 2 / (pi t |omega''(k_x)|) { (1 - x/t)^2 cos^2[omega(k_x) t + x k_x - pi/4]
 *                               + (1 - (x/t)^2) cos^2[omega(k_x) t + (x-1) k_x - pi/4] },
 * with omega(k) = arcsin(sin k / sqrt 2), |omega''| = sin k / (1 + cos^2 k)^{3/2}, and k_x in
 * (0, pi) the stationary point solving cos k / sqrt(1 + cos^2 k) = -x/t. The
 * quadrature grid brackets k_x before bisection. Sites outside the peaks are zero.
 */
AsymptoticDistribution asymptotic_quantum_distribution(int t, int quadrature_points,
                                                       CoinSymmetry coin = CoinSymmetry::symmetric);

/// 2^{-t} C(t, (t+x)/2) on sites with x + t even.
PositionDistribution binomial_distribution(int t);

/// w P^Q + (1 - w) P^R with w in [0, 1].
PositionDistribution mixture_distribution(int t, double weight, int quadrature_points,
                                          CoinSymmetry coin = CoinSymmetry::symmetric);

/// Same blend without the weight range check; negative weights can produce negative entries.
PositionDistribution signed_mixture_distribution(int t, double weight, int quadrature_points,
                                                 CoinSymmetry coin = CoinSymmetry::symmetric);

/// w t^2 (C2 - C1^2) + (1 - w) t
double mixture_variance(int t, double weight);

enum class MixtureWeight { abs_kappa, signed_kappa };

/// Weight used for the blend at step t: |kappa(t)| or kappa(t).
double mixture_weight(const DrivingSchedule& schedule, int t, MixtureWeight mode);

}  // namespace qwalk::asymptotics
