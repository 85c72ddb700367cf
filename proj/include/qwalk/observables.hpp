// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

struct MomentSet {
  double m1 = 0;
  double m2 = 0;
  double variance = 0;
  double spread = 0;
};

/// sum_x x^m P(x)
double moment(const PositionDistribution& p, int m);
double variance(const PositionDistribution& p);
MomentSet moments(const PositionDistribution& p);

/// Shannon entropy of P in bits over the whole window.
double position_entropy(const PositionDistribution& p);

/// max_x |P(x) - P(-x)|
double symmetry_defect(const PositionDistribution& p);

/// Largest P(x) over sites with x + t odd.
double parity_defect(const PositionDistribution& p, int t);

/// Largest P(x) with |x| > t.
double light_cone_defect(const PositionDistribution& p, int t);

/// Half the L1 distance; distributions may cover different ranges.
double total_variation(const PositionDistribution& a, const PositionDistribution& b);

/// Indices i with v[i-1] < v[i] > v[i+1] (plateaus count once, at their left edge).
std::vector<int> local_maxima(const std::vector<double>& v);
std::vector<int> local_minima(const std::vector<double>& v);

}  // namespace qwalk
