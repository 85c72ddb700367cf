// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "qwalk/numerics.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// Coin basis label. Index 0 is |+> (moves right), index 1 is |-> (moves left).
enum class Coin : int { plus = 0, minus = 1 };

/// Normalized initial coin amplitudes in the (|+>, |->) basis.
struct CoinSpec {
  Complex plus{1.0, 0.0};
  Complex minus{0.0, 0.0};

  /// (|+> + i|->)/sqrt(2); gives a mirror-symmetric walk with the Hadamard coin.
  static CoinSpec symmetric();
  static CoinSpec up();
  static CoinSpec down();
  /// (|+> + |->)/sqrt(2).
  static CoinSpec balanced();

  double norm_squared() const { return std::norm(plus) + std::norm(minus); }
  Eigen::Vector2cd vector() const { return {plus, minus}; }
};

/// Probability vector over consecutive integer positions starting at x_min.
struct PositionDistribution {
  int x_min = 0;
  std::vector<double> probabilities;

  int x_max() const { return x_min + static_cast<int>(probabilities.size()) - 1; }
  bool contains(int x) const { return x >= x_min && x <= x_max(); }
  /// P(x), zero outside the stored range.
  double at(int x) const { return contains(x) ? probabilities[static_cast<size_t>(x - x_min)] : 0.0; }
  double sum() const;
};

/**
 * @brief Walker (x) coin density matrix on the window [-T_max, T_max].
 *
 * Row/column index of |x, c> is 2 (x + T_max) + c, so each position owns a
 * contiguous 2x2 coin block. Instances are immutable; operations return new
 * states.
 */
class JointState {
 public:
  JointState(int half_width, int time, ComplexMatrix rho);

  int half_width() const { return half_width_; }
  int time() const { return time_; }
  int sites() const { return 2 * half_width_ + 1; }
  Eigen::Index dimension() const { return rho_.rows(); }
  const ComplexMatrix& rho() const { return rho_; }

  Eigen::Index index(int x, Coin c) const {
    return 2 * static_cast<Eigen::Index>(x + half_width_) + static_cast<int>(c);
  }
  int position_of(Eigen::Index i) const { return static_cast<int>(i / 2) - half_width_; }

  /// Positions whose diagonal weight is nonzero. For a PSD matrix every other
  /// row and column vanishes, so entropies can be computed on this subspace.
  std::vector<int> occupied_positions() const;

 private:
  int half_width_;
  int time_;
  ComplexMatrix rho_;
};

/// |0><0| (x) |coin><coin| on a window of half-width T_max.
JointState initial_state(const CoinSpec& coin, int half_width);

PositionDistribution position_distribution(const JointState& s);

/// Partial trace over the walker.
Eigen::Matrix2cd reduced_coin(const JointState& s);

/// Partial trace over the coin; (2 T_max + 1)-dimensional.
ComplexMatrix reduced_walker(const JointState& s);

/// Restriction of rho to the given positions (both coin states kept).
ComplexMatrix restrict_to_positions(const JointState& s, const std::vector<int>& positions);

/// Trace, Hermiticity and (optionally) spectrum diagnostics of a state.
struct StateDiagnostics {
  double trace_defect = 0;
  double hermiticity_defect = 0;
  double min_eigenvalue = 0;
  bool eigenvalues_checked = false;
};

StateDiagnostics diagnose(const JointState& s, bool with_spectrum);

}  // namespace qwalk
