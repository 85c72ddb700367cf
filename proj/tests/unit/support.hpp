// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <random>

#include "qwalk/numerics.hpp"

namespace qwalk::testing {

inline ComplexMatrix random_matrix(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = {g(rng), g(rng)};
  }
  return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, rng);
  return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Full-rank density matrix A A^dagger / Tr.
inline ComplexMatrix random_density(Eigen::Index n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, rng);
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

}  // namespace qwalk::testing
