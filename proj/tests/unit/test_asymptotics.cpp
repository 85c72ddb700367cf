// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "qwalk/asymptotics.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;
using namespace qwalk::asymptotics;

TEST_SUITE("asymptotics") {
  TEST_CASE("ballistic constants") {
    const auto c = ballistic_constants(4096);
    CHECK(std::abs(c.c1 - 0.2928932188134524) <= 1e-9);
    CHECK(std::abs(c.c2 - c.c1) <= 1e-12);
    CHECK(std::abs(c.variance_coefficient - 0.2071067811865476) <= 1e-9);
    CHECK(std::abs(c.analytic - (1.0 - 1.0 / std::sqrt(2.0))) <= 1e-15);
    CHECK_THROWS_AS(ballistic_constants(128), ContractViolation);
  }

  TEST_CASE("asymptotic variance") {
    CHECK(asymptotic_quantum_variance(0) == 0.0);
    CHECK(asymptotic_quantum_variance(10) == doctest::Approx(20.71068).epsilon(1e-7));
    CHECK(asymptotic_quantum_variance(100) == doctest::Approx(2071.068).epsilon(1e-7));
  }

  TEST_CASE("biased walk approaches the ballistic constants") {
    const auto tr = evolve_from_origin(CoinSpec::up(), DrivingSchedule::constant(1.0), 200);
    const auto& r = tr.records.back();
    CHECK(std::abs(std::abs(r.mean) / 200.0 - 0.2928932) <= 0.01);
    CHECK(std::abs(r.variance - asymptotic_quantum_variance(200)) / asymptotic_quantum_variance(200) <= 0.05);
    CHECK(std::abs(tr.records[100].variance - asymptotic_quantum_variance(100)) / asymptotic_quantum_variance(100) <=
          0.05);
  }

  TEST_CASE("asymptotic distribution: symmetry, parity and support") {
    const auto a = asymptotic_quantum_distribution(100, 4096);
    const auto& p = a.distribution;
    CHECK(std::abs(p.sum() - 1.0) <= 1e-12);
    CHECK(symmetry_defect(p) <= 1e-9);
    CHECK(parity_defect(p, 100) == 0.0);
    for (int x = -100; x <= 100; ++x) {
      CHECK(p.at(x) >= 0.0);
      if (std::abs(x) >= 100.0 / std::sqrt(2.0)) CHECK(p.at(x) == 0.0);
    }
    CHECK_THROWS_AS(asymptotic_quantum_distribution(10, 4096), ContractViolation);
    CHECK_THROWS_AS(asymptotic_quantum_distribution(100, 400), ContractViolation);
  }

  TEST_CASE("normalization defect shrinks with t") {
    const double d30 = asymptotic_quantum_distribution(30, 4096).normalization_defect;
    const double d100 = asymptotic_quantum_distribution(100, 4096).normalization_defect;
    CHECK(d100 < d30);
  }

  TEST_CASE("asymptotic distribution against the simulated unitary walk") {
    EvolveOptions opts;
    opts.keep_distributions = true;
    const auto sym = evolve_from_origin(CoinSpec::symmetric(), DrivingSchedule::constant(1.0), 100, opts);
    const auto up = evolve_from_origin(CoinSpec::up(), DrivingSchedule::constant(1.0), 100, opts);
    const double tv_sym = total_variation(sym.distributions.back(), asymptotic_quantum_distribution(100, 4096).distribution);
    const double tv_up = total_variation(
        up.distributions.back(), asymptotic_quantum_distribution(100, 4096, CoinSymmetry::biased).distribution);
    MESSAGE("TV(P^Q, simulation) at t=100: symmetric " << tv_sym << ", biased " << tv_up);
    CHECK(tv_sym <= 0.08);
    CHECK(tv_up <= 0.08);
  }

  TEST_CASE("binomial") {
    const auto b2 = binomial_distribution(2);
    CHECK(b2.at(-2) == 0.25);
    CHECK(b2.at(0) == 0.5);
    CHECK(b2.at(2) == 0.25);
    const auto b1 = binomial_distribution(1);
    CHECK(b1.at(-1) == 0.5);
    CHECK(b1.at(1) == 0.5);
    CHECK(std::abs(variance(binomial_distribution(50)) - 50.0) <= 1e-9);
    for (const int t : {0, 7, 30, 31, 120, 200}) {
      const auto b = binomial_distribution(t);
      CHECK(std::abs(b.sum() - 1.0) <= 1e-12);
      CHECK(parity_defect(b, t) == 0.0);
    }
  }

  TEST_CASE("mixtures") {
    const auto q = asymptotic_quantum_distribution(40, 4096).distribution;
    CHECK(total_variation(mixture_distribution(40, 1.0, 4096), q) == 0.0);
    CHECK(total_variation(mixture_distribution(40, 0.0, 4096), binomial_distribution(40)) == 0.0);
    const auto half = mixture_distribution(40, 0.5, 4096);
    CHECK(std::abs(half.sum() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(mixture_distribution(40, 1.2, 4096), ContractViolation);

    CHECK(mixture_variance(100, 1.0) == doctest::Approx(2071.068).epsilon(1e-7));
    CHECK(mixture_variance(100, 0.0) == 100.0);
    CHECK(mixture_variance(100, 0.5) == doctest::Approx(1085.534).epsilon(1e-7));
    for (int t = 5; t <= 100; t += 5) {
      for (double w = 0.0; w < 1.0; w += 0.1) CHECK(mixture_variance(t, w + 0.1) > mixture_variance(t, w));
    }
  }

  TEST_CASE("mixture weights") {
    const auto c = DrivingSchedule::cosine(0.1);
    CHECK(mixture_weight(c, 90, MixtureWeight::abs_kappa) == doctest::Approx(0.9111).epsilon(1e-4));
    CHECK(mixture_weight(c, 90, MixtureWeight::signed_kappa) == doctest::Approx(-0.9111).epsilon(1e-4));
  }
}
