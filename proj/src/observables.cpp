// SPDX-License-Identifier: Apache-2.0
#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

double moment(const PositionDistribution& p, int m) {
  double acc = 0;
  for (size_t i = 0; i < p.probabilities.size(); ++i) {
    const double x = p.x_min + static_cast<int>(i);
    acc += std::pow(x, m) * p.probabilities[i];
  }
  return acc;
}

MomentSet moments(const PositionDistribution& p) {
  MomentSet s;
  s.m1 = moment(p, 1);
  s.m2 = moment(p, 2);
  s.variance = s.m2 - s.m1 * s.m1;
  s.spread = std::sqrt(std::max(s.variance, 0.0));
  return s;
}

double variance(const PositionDistribution& p) { return moments(p).variance; }

double position_entropy(const PositionDistribution& p) { return shannon_entropy(p.probabilities); }

double symmetry_defect(const PositionDistribution& p) {
  const int reach = std::max(std::abs(p.x_min), std::abs(p.x_max()));
  double worst = 0;
  for (int x = 0; x <= reach; ++x) worst = std::max(worst, std::abs(p.at(x) - p.at(-x)));
  return worst;
}

double parity_defect(const PositionDistribution& p, int t) {
  double worst = 0;
  for (int x = p.x_min; x <= p.x_max(); ++x) {
    if (((x + t) % 2 + 2) % 2 == 1) worst = std::max(worst, std::abs(p.at(x)));
  }
  return worst;
}

double light_cone_defect(const PositionDistribution& p, int t) {
  double worst = 0;
  for (int x = p.x_min; x <= p.x_max(); ++x) {
    if (std::abs(x) > t) worst = std::max(worst, std::abs(p.at(x)));
  }
  return worst;
}

double total_variation(const PositionDistribution& a, const PositionDistribution& b) {
  const int lo = std::min(a.x_min, b.x_min);
  const int hi = std::max(a.x_max(), b.x_max());
  double l1 = 0;
  for (int x = lo; x <= hi; ++x) l1 += std::abs(a.at(x) - b.at(x));
  return 0.5 * l1;
}

namespace {

std::vector<int> extrema(const std::vector<double>& v, bool maxima) {
  std::vector<int> out;
  const int n = static_cast<int>(v.size());
  auto above = [&](double a, double b) { return maxima ? a > b : a < b; };
  int i = 1;
  while (i < n - 1) {
    if (above(v[static_cast<size_t>(i)], v[static_cast<size_t>(i - 1)])) {
      int j = i;
      while (j + 1 < n && v[static_cast<size_t>(j + 1)] == v[static_cast<size_t>(i)]) ++j;
      if (j + 1 < n && above(v[static_cast<size_t>(i)], v[static_cast<size_t>(j + 1)])) out.push_back(i);
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace

std::vector<int> local_maxima(const std::vector<double>& v) { return extrema(v, true); }
std::vector<int> local_minima(const std::vector<double>& v) { return extrema(v, false); }

}  // namespace qwalk
