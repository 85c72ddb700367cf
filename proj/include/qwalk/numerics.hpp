// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using RealVector = RVector<double>;

/// Eigenpairs of a Hermitian matrix. Eigenvalues are sorted in descending
/// order; each eigenvector column has its first non-negligible component
/// real and positive.
template <typename Real>
struct Spectrum {
  RVector<Real> eigenvalues;
  CMatrix<Real> eigenvectors;
};

namespace numerics {

constexpr double kHermitianTolerance = 1e-9;
constexpr double kEigenClamp = 1e-12;
constexpr double kNegativeClamp = 1e-9;

// A probability within rounding of one carries no entropy; this keeps pure states at exactly 0 bits.
template <typename Real>
bool is_unit(Real p) {
  return std::abs(p - Real(1)) < Real(64) * std::numeric_limits<Real>::epsilon();
}

/// Largest entry of |M - M^dagger|.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return 0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ContractViolation(std::string(what) + ": matrix is not square");
  }
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Real scale = m.rows() == 0 ? Real(1) : std::max<Real>(Real(1), m.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m) > Real(kHermitianTolerance) * scale) {
    throw ContractViolation(std::string(what) + ": matrix is not Hermitian");
  }
}

}  // namespace numerics

/**
 * @brief Full eigendecomposition of a Hermitian matrix.
 *
 * Only the lower triangle is read by the solver; the input is validated for
 * squareness and Hermiticity first. Output ordering and eigenvector phases are
 * fixed so identical inputs give identical spectra.
 */
template <typename Derived>
Spectrum<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigendecompose(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Complex = std::complex<Real>;
  numerics::require_hermitian(m, "hermitian_eigendecompose");

  const CMatrix<Real> a = m.template cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigendecompose: solver did not converge");
  }

  // Eigen returns ascending order; reverse to descending.
  const Eigen::Index n = a.rows();
  Spectrum<Real> out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();

  for (Eigen::Index c = 0; c < n; ++c) {
    auto col = out.eigenvectors.col(c);
    const Real threshold = Real(1e-10) * col.cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < n; ++r) {
      const Real mag = std::abs(col(r));
      if (mag > threshold) {
        col *= std::conj(col(r)) / mag;
        col(r) = Complex(mag, 0);
        break;
      }
    }
  }
  return out;
}

/// Eigenvalues only, descending. Cheaper than the full decomposition.
template <typename Derived>
RVector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Complex = std::complex<Real>;
  numerics::require_hermitian(m, "hermitian_eigenvalues");
  if (m.rows() == 0) return RVector<Real>();
  const CMatrix<Real> a = m.template cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  }
  return solver.eigenvalues().reverse();
}

/// -sum p log2 p over a spectrum, skipping entries below the clamp threshold.
template <typename Real>
Real entropy_bits(std::span<const Real> probabilities) {
  Real h = 0;
  for (const Real p : probabilities) {
    if (p > Real(numerics::kEigenClamp) && !numerics::is_unit(p)) h -= p * std::log2(p);
  }
  return h;
}

template <typename Derived>
typename Derived::Scalar spectral_entropy_bits(const Eigen::DenseBase<Derived>& eigenvalues) {
  using Real = typename Derived::Scalar;
  Real h = 0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const Real p = eigenvalues(i);
    if (p > Real(numerics::kEigenClamp) && !numerics::is_unit(p)) h -= p * std::log2(p);
  }
  return h;
}

/**
 * @brief von Neumann entropy in bits.
 *
 * Requires a density matrix: trace within 1e-6 of one and no eigenvalue below
 * -1e-9. Eigenvalues in [-1e-9, 1e-12] contribute nothing.
 */
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real von_neumann_entropy(
    const Eigen::MatrixBase<Derived>& rho) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Real tr = std::real(rho.trace());
  if (std::abs(tr - Real(1)) > Real(1e-6)) {
    throw ContractViolation("von_neumann_entropy: trace deviates from 1");
  }
  const RVector<Real> ev = hermitian_eigenvalues(rho);
  if (ev.size() > 0 && ev.minCoeff() < -Real(numerics::kNegativeClamp)) {
    throw ContractViolation("von_neumann_entropy: matrix is not positive semidefinite");
  }
  return spectral_entropy_bits(ev);
}

/// Shannon entropy in bits of a probability vector.
template <typename Real>
Real shannon_entropy(std::span<const Real> p) {
  Real sum = 0;
  for (const Real v : p) {
    if (v < Real(-1e-12)) throw ContractViolation("shannon_entropy: negative probability");
    sum += v;
  }
  if (std::abs(sum - Real(1)) > Real(1e-9)) {
    throw ContractViolation("shannon_entropy: probabilities do not sum to 1");
  }
  Real h = 0;
  for (const Real v : p) {
    if (v > 0 && !numerics::is_unit(v)) h -= v * std::log2(v);
  }
  return h;
}

template <typename Real>
Real shannon_entropy(const std::vector<Real>& p) {
  return shannon_entropy(std::span<const Real>(p));
}

/// Kronecker product of two dense matrices.
template <typename A, typename B>
CMatrix<typename Eigen::NumTraits<typename A::Scalar>::Real> kron(const Eigen::MatrixBase<A>& a,
                                                                  const Eigen::MatrixBase<B>& b) {
  using Real = typename Eigen::NumTraits<typename A::Scalar>::Real;
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          std::complex<Real>(a(i, j)) * b.template cast<std::complex<Real>>();
    }
  }
  return out;
}

}  // namespace qwalk
