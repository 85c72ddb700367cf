// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "qwalk/asymptotics.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"
#include "support.hpp"

using namespace qwalk;

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double purity(const JointState& s) { return (s.rho() * s.rho()).trace().real(); }

JointState random_state(int half_width, std::mt19937_64& rng) {
  return JointState(half_width, 0, testing::random_density(2 * (2 * half_width + 1), rng));
}

}  // namespace

TEST_SUITE("evolution") {
  TEST_CASE("dephasing scales coin coherences") {
    std::mt19937_64 rng(5);
    const JointState s = random_state(2, rng);
    CHECK(max_abs(apply_coin_dephasing(s, 1.0).rho() - s.rho()) == 0.0);
    const JointState z = apply_coin_dephasing(s, 0.0);
    for (Eigen::Index i = 0; i < s.dimension(); ++i) {
      for (Eigen::Index j = 0; j < s.dimension(); ++j) {
        if ((i + j) % 2 == 1) {
          CHECK(z.rho()(i, j) == Complex(0.0));
        } else {
          CHECK(z.rho()(i, j) == s.rho()(i, j));
        }
      }
    }
    CHECK_THROWS_AS(apply_coin_dephasing(s, 1.01), ContractViolation);
  }

  TEST_CASE("half-strength dephasing on the default coin") {
    const JointState s = apply_coin_dephasing(initial_state(CoinSpec::symmetric(), 1), 0.5);
    const Eigen::Matrix2cd rc = reduced_coin(s);
    Eigen::Matrix2cd expected;
    expected << 0.5, Complex(0.0, -0.25), Complex(0.0, 0.25), 0.5;
    CHECK((rc - expected).cwiseAbs().maxCoeff() < 1e-15);
  }

  TEST_CASE("Kraus route equals direct scaling") {
    std::mt19937_64 rng(9);
    const JointState s = random_state(3, rng);
    for (const double k : {0.0, 0.2, 0.5, 0.93, 1.0}) {
      CHECK(max_abs(apply_coin_dephasing_kraus(s, k).rho() - apply_coin_dephasing(s, k).rho()) <= 1e-14);
    }
    CHECK_THROWS_AS(apply_coin_dephasing_kraus(s, -0.5), ContractViolation);

    // Phase-flip pair covers negative kappa.
    for (const double k : {-1.0, -0.4, 0.3}) {
      const std::array<Eigen::Matrix2cd, 2> pair{
          std::sqrt((1 + k) / 2) * Eigen::Matrix2cd::Identity(),
          std::sqrt((1 - k) / 2) * Eigen::Vector2cd(1.0, -1.0).asDiagonal().toDenseMatrix()};
      CHECK(max_abs(apply_coin_channel(s, pair).rho() - apply_coin_dephasing(s, k).rho()) <= 1e-14);
    }
  }

  TEST_CASE("kappa = -1 is a unitary conjugation") {
    JointState s = initial_state(CoinSpec::symmetric(), 10);
    for (int t = 0; t < 10; ++t) s = apply_walk_unitary(apply_coin_dephasing(s, -1.0));
    CHECK(std::abs(purity(s) - 1.0) <= 1e-10);
  }

  TEST_CASE("single step from |+>") {
    const JointState s = apply_walk_unitary(initial_state(CoinSpec::up(), 2));
    const Complex a = s.rho()(s.index(1, Coin::plus), s.index(1, Coin::plus));
    const Complex b = s.rho()(s.index(-1, Coin::minus), s.index(-1, Coin::minus));
    const Complex c = s.rho()(s.index(1, Coin::plus), s.index(-1, Coin::minus));
    CHECK(std::abs(a - 0.5) < 1e-15);
    CHECK(std::abs(b - 0.5) < 1e-15);
    CHECK(std::abs(c - 0.5) < 1e-15);
  }

  TEST_CASE("step equals unitary after dephasing at the next index") {
    std::mt19937_64 rng(1);
    const auto schedule = DrivingSchedule::cosine(0.7);
    JointState s(4, 2, testing::random_density(18, rng));
    const JointState a = step(s, schedule);
    const JointState b = apply_walk_unitary(apply_coin_dephasing(s, kappa_at(schedule, 3)));
    CHECK(a.time() == 3);
    CHECK(max_abs(a.rho() - b.rho()) == 0.0);
    CHECK(max_abs(step(s, DrivingSchedule::constant(1.0)).rho() - apply_walk_unitary(s).rho()) == 0.0);
  }

  TEST_CASE("horizon errors") {
    JointState s = initial_state(CoinSpec::symmetric(), 2);
    s = apply_walk_unitary(apply_walk_unitary(s));
    CHECK_THROWS_AS(apply_walk_unitary(s), HorizonExceeded);
    CHECK_THROWS_AS(evolve(initial_state(CoinSpec::symmetric(), 5), DrivingSchedule::constant(1.0), 6), ConfigError);
  }

  TEST_CASE("trajectory shapes and hand values") {
    const Trajectory t0 = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::constant(1.0), 0);
    REQUIRE(t0.records.size() == 1);
    CHECK(t0.records[0].variance == 0.0);
    CHECK(t0.records[0].entropy == 0.0);

    const Trajectory t2 = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::constant(1.0), 2);
    REQUIRE(t2.records.size() == 3);
    CHECK(t2.records[1].variance == doctest::Approx(1.0));
    CHECK(t2.records[2].variance == doctest::Approx(2.0));
  }

  TEST_CASE("fully dephased walk is the binomial walk") {
    EvolveOptions opts;
    opts.keep_distributions = true;
    const Trajectory tr = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::constant(0.0), 50, opts);
    for (int t = 0; t <= 50; ++t) {
      CHECK(std::abs(tr.records[size_t(t)].variance - t) <= 1e-10);
      CHECK(total_variation(tr.distributions[size_t(t)], asymptotics::binomial_distribution(t)) <= 1e-10);
    }
  }

  TEST_CASE("invariants along driven and unitary runs") {
    EvolveOptions opts;
    opts.check_invariants = true;
    opts.eigen_check_stride = 5;
    opts.snapshot_times = {0, 20, 40};
    const Trajectory tr = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::cosine(0.1), 40, opts);
    CHECK(tr.invariants.max_trace_defect <= 1e-12);
    CHECK(tr.invariants.max_hermiticity_defect <= 1e-12);
    CHECK(tr.invariants.min_eigenvalue >= -1e-10);
    CHECK(tr.invariants.eigen_checks >= 8);
    CHECK(tr.snapshots.size() == 3);
    CHECK(tr.snapshots.at(20).time() == 20);

    JointState s = initial_state(CoinSpec::symmetric(), 30);
    for (int t = 0; t < 30; ++t) {
      s = step(s, DrivingSchedule::constant(1.0));
      CHECK(std::abs(purity(s) - 1.0) <= 1e-10);
    }
  }

  TEST_CASE("variance stays between the diffusive and unitary curves") {
    const int horizon = 100;
    const auto driven = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::cosine(0.1), horizon);
    const auto unitary = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::constant(1.0), horizon);
    for (int t = 0; t <= horizon; ++t) {
      const double v = driven.records[size_t(t)].variance;
      CHECK(v >= t - 1e-6);
      CHECK(v <= unitary.records[size_t(t)].variance + 1e-6);
    }
  }

  TEST_CASE("mirror symmetry and parity under every schedule") {
    EvolveOptions opts;
    opts.keep_distributions = true;
    for (const char* spec : {"const:1", "const:0", "cos:0.1", "saw", "piecewise:0-5=1,5-12=0,12-inf=1", "const:-0.6"}) {
      const Trajectory tr = evolve_from_origin(CoinSpec::symmetric(), parse_schedule(spec), 40, opts);
      for (int t = 0; t <= 40; ++t) {
        CHECK(symmetry_defect(tr.distributions[size_t(t)]) <= 1e-10);
        CHECK(parity_defect(tr.distributions[size_t(t)], t) == 0.0);
        CHECK(light_cone_defect(tr.distributions[size_t(t)], t) == 0.0);
      }
    }
  }
}
