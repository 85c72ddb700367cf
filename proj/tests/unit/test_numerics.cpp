// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/numerics.hpp"
#include "support.hpp"

using namespace qwalk;

TEST_SUITE("numerics") {
  TEST_CASE("eigenvalues of small reference matrices") {
    const auto id = hermitian_eigendecompose(ComplexMatrix::Identity(2, 2));
    CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(id.eigenvalues(1) == doctest::Approx(1.0));

    ComplexMatrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    const auto sz = hermitian_eigendecompose(z);
    CHECK(sz.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(sz.eigenvalues(1) == doctest::Approx(-1.0));

    ComplexMatrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    const auto sh = hermitian_eigendecompose(h);
    CHECK(sh.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(sh.eigenvalues(1) == doctest::Approx(-1.0));
  }

  TEST_CASE("non-Hermitian or non-square input is rejected") {
    ComplexMatrix a(2, 2);
    a << 1.0, 2.0, 0.0, 1.0;
    CHECK_THROWS_AS(hermitian_eigendecompose(a), ContractViolation);
    CHECK_THROWS_AS(hermitian_eigendecompose(ComplexMatrix::Zero(2, 3)), ContractViolation);
  }

  TEST_CASE("random Hermitian residual, orthonormality and sign convention") {
    std::mt19937_64 rng(7);
    for (const Eigen::Index n : {1, 5, 64, 512}) {
      const ComplexMatrix m = testing::random_hermitian(n, rng);
      const auto s = hermitian_eigendecompose(m);
      const ComplexMatrix residual = m * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
      CHECK(residual.cwiseAbs().maxCoeff() <= 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()));
      const ComplexMatrix gram = s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(n, n);
      CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);
      for (Eigen::Index i = 0; i + 1 < n; ++i) CHECK(s.eigenvalues(i) >= s.eigenvalues(i + 1));
      for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::Index first = 0;
        while (std::abs(s.eigenvectors(first, j)) < 1e-10) ++first;
        CHECK(std::abs(s.eigenvectors(first, j).imag()) <= 1e-15);
        CHECK(s.eigenvectors(first, j).real() > 0);
      }
    }
  }

  TEST_CASE("decomposition is deterministic") {
    std::mt19937_64 rng(11);
    const ComplexMatrix m = testing::random_hermitian(40, rng);
    const auto a = hermitian_eigendecompose(m);
    const auto b = hermitian_eigendecompose(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
  }

  TEST_CASE("von Neumann entropy examples") {
    Eigen::Matrix2cd plus;
    plus << 1.0, 0.0, 0.0, 0.0;
    CHECK(von_neumann_entropy(plus) == 0.0);
    CHECK(von_neumann_entropy(Eigen::Matrix2cd(0.5 * Eigen::Matrix2cd::Identity())) == doctest::Approx(1.0));
    Eigen::Matrix2cd d;
    d << 0.25, 0.0, 0.0, 0.75;
    CHECK(von_neumann_entropy(d) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK_THROWS_AS(von_neumann_entropy(Eigen::Matrix2cd(Eigen::Matrix2cd::Identity())), ContractViolation);
  }

  TEST_CASE("entropy is unitarily invariant and additive") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix rho = testing::random_density(6, rng);
      const ComplexMatrix u = testing::random_unitary(6, rng);
      const ComplexMatrix rotated = u * rho * u.adjoint();
      CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <= 1e-9);

      const ComplexMatrix sigma = testing::random_density(3, rng);
      const double joint = von_neumann_entropy(kron(rho, sigma));
      CHECK(std::abs(joint - von_neumann_entropy(rho) - von_neumann_entropy(sigma)) <= 1e-9);
    }
  }

  TEST_CASE("Shannon entropy examples and contract") {
    CHECK(shannon_entropy(std::vector<double>{0.0, 1.0, 0.0}) == 0.0);
    CHECK(shannon_entropy(std::vector<double>{0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    CHECK(shannon_entropy(std::vector<double>{0.25, 0.5, 0.25}) == doctest::Approx(1.5));
    CHECK_THROWS_AS(shannon_entropy(std::vector<double>{1.1, -0.1}), ContractViolation);
    CHECK_THROWS_AS(shannon_entropy(std::vector<double>{0.5, 0.4}), ContractViolation);
  }

  TEST_CASE("kron of Pauli matrices") {
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    const ComplexMatrix xx = kron(x, x);
    CHECK(xx(0, 3) == std::complex<double>(1.0));
    CHECK(xx(3, 0) == std::complex<double>(1.0));
    CHECK(xx(0, 0) == std::complex<double>(0.0));
  }
}
