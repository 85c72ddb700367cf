// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/walk_state.hpp"

using namespace qwalk;

namespace {
const Complex I(0.0, 1.0);
}

TEST_SUITE("walk-state") {
  TEST_CASE("initial state with the default coin") {
    const JointState s = initial_state(CoinSpec::symmetric(), 2);
    CHECK(s.dimension() == 10);
    CHECK(s.time() == 0);
    const auto b = s.rho().block(s.index(0, Coin::plus), s.index(0, Coin::plus), 2, 2);
    CHECK(std::abs(b(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(b(0, 1) - (-0.5 * I)) < 1e-15);
    CHECK(std::abs(b(1, 0) - 0.5 * I) < 1e-15);
    CHECK(std::abs(b(1, 1) - 0.5) < 1e-15);
    CHECK(s.rho().cwiseAbs().sum() == doctest::Approx(2.0));
  }

  TEST_CASE("initial state with other coins") {
    const JointState up = initial_state(CoinSpec::up(), 3);
    const Eigen::Matrix2cd rc = reduced_coin(up);
    CHECK(rc(0, 0) == Complex(1.0));
    CHECK(std::abs(rc(1, 1)) == 0.0);
    const Eigen::Matrix2cd bal = reduced_coin(initial_state(CoinSpec::balanced(), 1));
    CHECK((bal - 0.5 * Eigen::Matrix2cd::Ones()).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("initial state contract") {
    CoinSpec bad;
    bad.plus = 1.0;
    bad.minus = 1.0;
    CHECK_THROWS_AS(initial_state(bad, 3), ContractViolation);
    CHECK_THROWS_AS(initial_state(CoinSpec::up(), 0), ContractViolation);
  }

  TEST_CASE("position distribution of the initial and early states") {
    const JointState s0 = initial_state(CoinSpec::symmetric(), 3);
    const PositionDistribution p0 = position_distribution(s0);
    CHECK(p0.at(0) == doctest::Approx(1.0));
    CHECK(p0.sum() == doctest::Approx(1.0));
    for (int x = -3; x <= 3; ++x) {
      if (x != 0) CHECK(p0.at(x) == 0.0);
    }
    const JointState s1 = apply_walk_unitary(s0);
    const PositionDistribution p1 = position_distribution(s1);
    CHECK(p1.at(-1) == doctest::Approx(0.5));
    CHECK(p1.at(1) == doctest::Approx(0.5));
    const PositionDistribution p2 = position_distribution(apply_walk_unitary(s1));
    CHECK(p2.at(-2) == doctest::Approx(0.25));
    CHECK(p2.at(0) == doctest::Approx(0.5));
    CHECK(p2.at(2) == doctest::Approx(0.25));
  }

  TEST_CASE("reduced states") {
    const JointState s0 = initial_state(CoinSpec::symmetric(), 2);
    const ComplexMatrix w0 = reduced_walker(s0);
    CHECK(w0.rows() == 5);
    CHECK(std::abs(w0(2, 2) - 1.0) < 1e-15);

    const JointState s1 = apply_walk_unitary(s0);
    const Eigen::Matrix2cd rc = reduced_coin(s1);
    CHECK((rc - 0.5 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const ComplexMatrix w1 = reduced_walker(s1);
    const auto ev = hermitian_eigenvalues(w1);
    CHECK(ev(0) == doctest::Approx(0.5));
    CHECK(ev(1) == doctest::Approx(0.5));
    CHECK(std::abs(ev(2)) < 1e-15);

    const PositionDistribution p1 = position_distribution(s1);
    for (int x = -2; x <= 2; ++x) CHECK(std::abs(w1(x + 2, x + 2).real() - p1.at(x)) < 1e-15);
  }

  TEST_CASE("dephased state has a diagonal coin marginal") {
    const JointState s = apply_coin_dephasing(apply_walk_unitary(initial_state(CoinSpec::balanced(), 3)), 0.0);
    const Eigen::Matrix2cd rc = reduced_coin(s);
    CHECK(std::abs(rc(0, 1)) == 0.0);
    CHECK(std::abs(rc(1, 0)) == 0.0);
  }

  TEST_CASE("reduced maps commute with mixtures") {
    const JointState a = apply_walk_unitary(initial_state(CoinSpec::symmetric(), 3));
    const JointState b = apply_walk_unitary(apply_walk_unitary(initial_state(CoinSpec::up(), 3)));
    const JointState mix(3, 2, 0.3 * a.rho() + 0.7 * b.rho());
    CHECK((reduced_coin(mix) - (0.3 * reduced_coin(a) + 0.7 * reduced_coin(b))).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((reduced_walker(mix) - (0.3 * reduced_walker(a) + 0.7 * reduced_walker(b))).cwiseAbs().maxCoeff() <
          1e-15);
  }

  TEST_CASE("diagnostics on valid states") {
    const JointState s = apply_walk_unitary(apply_walk_unitary(initial_state(CoinSpec::symmetric(), 4)));
    const StateDiagnostics d = diagnose(s, true);
    CHECK(d.trace_defect < 1e-14);
    CHECK(d.hermiticity_defect < 1e-15);
    CHECK(d.min_eigenvalue > -1e-14);
    CHECK(d.eigenvalues_checked);
    CHECK(s.occupied_positions() == std::vector<int>{-2, 0, 2});
  }
}
