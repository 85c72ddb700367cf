// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "qwalk/observables.hpp"

using namespace qwalk;

namespace {
PositionDistribution dist(int x_min, std::vector<double> p) { return PositionDistribution{x_min, std::move(p)}; }
}  // namespace

TEST_SUITE("observables") {
  TEST_CASE("moments") {
    const auto delta = dist(0, {1.0});
    CHECK(moment(delta, 1) == 0.0);
    CHECK(variance(delta) == 0.0);
    const auto one = dist(-1, {0.5, 0.0, 0.5});
    CHECK(moment(one, 2) == doctest::Approx(1.0));
    const auto two = dist(-2, {0.25, 0.0, 0.5, 0.0, 0.25});
    CHECK(moment(two, 2) == doctest::Approx(2.0));
    const auto m = moments(dist(0, {0.5, 0.5}));
    CHECK(m.m1 == doctest::Approx(0.5));
    CHECK(m.variance == doctest::Approx(0.25));
    CHECK(m.spread == doctest::Approx(0.5));
  }

  TEST_CASE("entropy over the window") {
    CHECK(position_entropy(dist(-2, {0.25, 0.0, 0.5, 0.0, 0.25})) == doctest::Approx(1.5));
    CHECK(position_entropy(dist(3, {1.0})) == 0.0);
  }

  TEST_CASE("symmetry, parity and light-cone defects") {
    CHECK(symmetry_defect(dist(-1, {0.5, 0.0, 0.5})) == 0.0);
    CHECK(symmetry_defect(dist(1, {1.0})) == 1.0);
    CHECK(parity_defect(dist(-1, {0.5, 0.0, 0.5}), 1) == 0.0);
    CHECK(parity_defect(dist(-1, {0.4, 0.2, 0.4}), 1) == doctest::Approx(0.2));
    CHECK(light_cone_defect(dist(-3, {0.1, 0.0, 0.8, 0.0, 0.1, 0.0, 0.0}), 1) == doctest::Approx(0.1));
  }

  TEST_CASE("total variation on offset supports") {
    CHECK(total_variation(dist(0, {1.0}), dist(1, {1.0})) == doctest::Approx(1.0));
    CHECK(total_variation(dist(-1, {0.5, 0.0, 0.5}), dist(-1, {0.5, 0.0, 0.5})) == 0.0);
    CHECK(total_variation(dist(-1, {0.5, 0.5}), dist(0, {1.0})) == doctest::Approx(0.5));
  }

  TEST_CASE("local extrema with plateaus") {
    const std::vector<double> v{0, 1, 2, 1, 0, 0, 1, 3, 3, 2};
    CHECK(local_maxima(v) == std::vector<int>{2, 7});
    CHECK(local_minima(v) == std::vector<int>{4});
    CHECK(local_maxima(std::vector<double>{0, 1, 2, 3}).empty());
  }
}
