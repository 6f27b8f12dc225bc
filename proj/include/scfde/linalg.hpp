#pragma once

#include <Eigen/Dense>
#include <complex>

#include "scfde/errors.hpp"
#include "scfde/rng.hpp"

namespace scfde {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rmat = Eigen::MatrixXd;
using rvec = Eigen::VectorXd;

inline bool all_finite(const cmat& a) { return a.allFinite(); }

inline double max_abs(const cmat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

/// Max deviation from Hermitian symmetry, relative to max(1, |a|).
inline double hermitian_defect(const cmat& a) {
  return max_abs(a - a.adjoint()) / std::max(1.0, max_abs(a));
}

inline bool is_unitary(const cmat& a, double tol = 1e-10) {
  return max_abs(a.adjoint() * a - cmat::Identity(a.cols(), a.cols())) <= tol;
}

inline double rel_frobenius_error(const cmat& got, const cmat& want) {
  double denom = want.norm();
  return (got - want).norm() / (denom > 0 ? denom : 1.0);
}

/// Symmetric eigen-decomposition based f(A) for Hermitian PSD input.
template <typename Fn>
cmat hermitian_apply(const cmat& a, Fn&& fn) {
  Eigen::SelfAdjointEigenSolver<cmat> es(a);
  if (es.info() != Eigen::Success)
    throw NumericError("hermitian_apply: eigen decomposition failed");
  rvec vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) vals[i] = fn(vals[i]);
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

/// A^{-1/2} for Hermitian positive-definite A.
inline cmat hermitian_inv_sqrt(const cmat& a) {
  Eigen::SelfAdjointEigenSolver<cmat> es(a);
  if (es.info() != Eigen::Success)
    throw NumericError("hermitian_inv_sqrt: eigen decomposition failed");
  const rvec& vals = es.eigenvalues();
  if (vals.minCoeff() <= 0)
    throw NumericError("hermitian_inv_sqrt: matrix not positive definite");
  rvec w(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    w[i] = 1.0 / std::sqrt(vals[i]);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

inline cmat random_complex(Rng& rng, int rows, int cols) {
  cmat a(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) a(i, j) = rng.cgaussian();
  return a;
}

/// Haar-ish random unitary from the QR of a complex Gaussian matrix.
inline cmat random_unitary(Rng& rng, int n) {
  Eigen::HouseholderQR<cmat> qr(random_complex(rng, n, n));
  cmat q = qr.householderQ();
  // Fix column phases so the factor is uniquely determined by the input.
  cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace scfde
