#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "scfde/linalg.hpp"

namespace scfde {

/// Unitary DFT matrix: entry (a,b) = exp(-j*2*pi*a*b/n) / sqrt(n).
inline cmat dft_matrix(int n) {
  if (n < 1) throw DimensionError("dft_matrix: size must be >= 1");
  cmat f(n, n);
  const double w = -2.0 * M_PI / n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(a, b) = std::polar(1.0 / std::sqrt(n), w * a * b);
  return f;
}

/// Per-tone matrices of a block-circulant filter:
/// tone_k = sum_l taps[l] * exp(-j*2*pi*k*l/n_c).
/// This is the block-diagonal of (F (x) I) * blkcirc(taps) * (F (x) I)^H
/// with F the unitary DFT; the 1/sqrt(n) factors cancel so tone values are
/// the plain tap DFT.
inline std::vector<cmat> taps_to_tones(const std::vector<cmat>& taps, int n_c) {
  if (taps.empty()) throw DimensionError("taps_to_tones: no taps");
  const int L = static_cast<int>(taps.size());
  if (L > n_c) throw DimensionError("taps_to_tones: more taps than tones");
  const Eigen::Index rows = taps[0].rows(), cols = taps[0].cols();
  for (const cmat& t : taps)
    if (t.rows() != rows || t.cols() != cols)
      throw DimensionError("taps_to_tones: taps differ in shape");
  std::vector<cmat> tones(n_c);
  for (int k = 0; k < n_c; ++k) {
    cmat acc = cmat::Zero(rows, cols);
    for (int l = 0; l < L; ++l)
      acc += taps[l] * std::polar(1.0, -2.0 * M_PI * k * l / n_c);
    tones[k] = std::move(acc);
  }
  return tones;
}

/// Inverse of taps_to_tones: returns all n_c taps
/// tap_l = (1/n_c) sum_k tones[k] * exp(+j*2*pi*k*l/n_c).
inline std::vector<cmat> tones_to_taps(const std::vector<cmat>& tones) {
  if (tones.empty()) throw DimensionError("tones_to_taps: no tones");
  const int n_c = static_cast<int>(tones.size());
  const Eigen::Index rows = tones[0].rows(), cols = tones[0].cols();
  std::vector<cmat> taps(n_c);
  for (int l = 0; l < n_c; ++l) {
    cmat acc = cmat::Zero(rows, cols);
    for (int k = 0; k < n_c; ++k)
      acc += tones[k] * std::polar(1.0, 2.0 * M_PI * k * l / n_c);
    taps[l] = acc / static_cast<double>(n_c);
  }
  return taps;
}

/// Unitary DFT across the columns of x (each column is one time sample of a
/// vector signal): X.col(k) = (1/sqrt(n)) sum_n x.col(n) e^{-j 2 pi k n / N}.
inline cmat block_dft(const cmat& x) {
  const int n = static_cast<int>(x.cols());
  cmat out(x.rows(), n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    cvec acc = cvec::Zero(x.rows());
    for (int t = 0; t < n; ++t)
      acc += x.col(t) * std::polar(s, -2.0 * M_PI * k * t / n);
    out.col(k) = acc;
  }
  return out;
}

/// Inverse of block_dft.
inline cmat block_idft(const cmat& x) {
  const int n = static_cast<int>(x.cols());
  cmat out(x.rows(), n);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int t = 0; t < n; ++t) {
    cvec acc = cvec::Zero(x.rows());
    for (int k = 0; k < n; ++k)
      acc += x.col(k) * std::polar(s, 2.0 * M_PI * k * t / n);
    out.col(t) = acc;
  }
  return out;
}

/// Full SVD with singular values sorted ascending. Columns are arranged so
/// that sigma[i] pairs with left.col(rows-p+i) and right.col(cols-p+i),
/// p = min(rows, cols): the right-most columns of both factors carry the
/// largest singular values, null-completion columns sit left-most. Paired
/// columns are phase-normalized so the largest-magnitude entry of each left
/// singular vector is real positive.
struct SortedSvd {
  cmat left;       // rows x rows, unitary
  rvec singular;   // p ascending
  cmat right;      // cols x cols, unitary

  cmat reconstruct() const {
    const Eigen::Index rows = left.rows(), cols = right.rows();
    const Eigen::Index p = singular.size();
    cmat a = cmat::Zero(rows, cols);
    for (Eigen::Index i = 0; i < p; ++i)
      a += singular[i] * left.col(rows - p + i) * right.col(cols - p + i).adjoint();
    return a;
  }
};

inline SortedSvd sorted_svd(const cmat& a) {
  if (!all_finite(a)) throw NumericError("sorted_svd: non-finite entries");
  Eigen::JacobiSVD<cmat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Eigen::Index p = std::min(rows, cols);
  SortedSvd out;
  out.left = cmat(rows, rows);
  out.right = cmat(cols, cols);
  out.singular = rvec(p);
  // Eigen orders singular values descending with paired columns first;
  // move the paired block to the right in ascending order and the
  // null-completion columns to the front.
  for (Eigen::Index i = 0; i < p; ++i) {
    const Eigen::Index src = p - 1 - i;  // descending -> ascending
    out.singular[i] = svd.singularValues()[src];
    out.left.col(rows - p + i) = svd.matrixU().col(src);
    out.right.col(cols - p + i) = svd.matrixV().col(src);
  }
  for (Eigen::Index i = 0; i < rows - p; ++i)
    out.left.col(i) = svd.matrixU().col(p + i);
  for (Eigen::Index i = 0; i < cols - p; ++i)
    out.right.col(i) = svd.matrixV().col(p + i);
  // Phase normalization: largest-magnitude entry of each paired left column
  // made real positive (the same rotation is applied to the right column so
  // the product is unchanged). Unpaired columns are normalized on their own.
  for (Eigen::Index i = 0; i < p; ++i) {
    const Eigen::Index c = rows - p + i;
    Eigen::Index imax = 0;
    out.left.col(c).cwiseAbs().maxCoeff(&imax);
    cplx v = out.left(imax, c);
    if (std::abs(v) > 0) {
      cplx ph = std::conj(v) / std::abs(v);
      out.left.col(c) *= ph;
      out.right.col(cols - p + i) *= ph;
    }
  }
  for (Eigen::Index c = 0; c < rows - p; ++c) {
    Eigen::Index imax = 0;
    out.left.col(c).cwiseAbs().maxCoeff(&imax);
    cplx v = out.left(imax, c);
    if (std::abs(v) > 0) out.left.col(c) *= std::conj(v) / std::abs(v);
  }
  for (Eigen::Index c = 0; c < cols - p; ++c) {
    Eigen::Index imax = 0;
    out.right.col(c).cwiseAbs().maxCoeff(&imax);
    cplx v = out.right(imax, c);
    if (std::abs(v) > 0) out.right.col(c) *= std::conj(v) / std::abs(v);
  }
  return out;
}

/// The m strongest singular triplets of a SortedSvd, strongest first
/// (stream index 1 pairs with the largest singular value).
struct TopStreams {
  cmat u;      // rows x m
  rvec sigma;  // m, descending
  cmat v;      // cols x m
};

inline TopStreams top_streams(const SortedSvd& svd, int m) {
  const Eigen::Index rows = svd.left.rows(), cols = svd.right.rows();
  const Eigen::Index p = svd.singular.size();
  if (m < 1 || m > p) throw DimensionError("top_streams: stream count out of range");
  TopStreams out;
  out.u = cmat(rows, m);
  out.v = cmat(cols, m);
  out.sigma = rvec(m);
  for (int i = 0; i < m; ++i) {
    out.sigma[i] = svd.singular[p - 1 - i];
    out.u.col(i) = svd.left.col(rows - 1 - i);
    out.v.col(i) = svd.right.col(cols - 1 - i);
  }
  return out;
}

/// Unpivoted LDL^H factorization of a Hermitian positive-definite matrix:
/// a = unit_lower * diag * unit_lower^H with real positive diag.
struct LdlFactorization {
  cmat unit_lower;
  rvec diag;

  cmat reconstruct() const {
    return unit_lower * diag.asDiagonal() *
           cmat(unit_lower.adjoint());
  }
};

inline LdlFactorization ldl(const cmat& a) {
  if (a.rows() != a.cols()) throw DimensionError("ldl: matrix not square");
  if (!all_finite(a)) throw NumericError("ldl: non-finite entries");
  if (hermitian_defect(a) > 1e-10)
    throw NumericError("ldl: input is not Hermitian");
  const Eigen::Index n = a.rows();
  LdlFactorization out;
  out.unit_lower = cmat::Identity(n, n);
  out.diag = rvec(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = std::real(a(j, j));
    for (Eigen::Index k = 0; k < j; ++k)
      d -= std::norm(out.unit_lower(j, k)) * out.diag[k];
    if (!(d > 0)) throw NumericError("ldl: non-positive pivot, input indefinite");
    out.diag[j] = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      cplx s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k)
        s -= out.unit_lower(i, k) * out.diag[k] * std::conj(out.unit_lower(j, k));
      out.unit_lower(i, j) = s / d;
    }
  }
  return out;
}

/// Geometric-mean decomposition of a square full-rank matrix:
/// a * v1^H = q * r with unitary q, v1 and upper-triangular r whose main
/// diagonal entries all equal the geometric mean of a's singular values.
struct GmdFactorization {
  cmat q;
  cmat r;
  cmat v1;
};

inline GmdFactorization gmd(const cmat& a) {
  if (a.rows() != a.cols()) throw DimensionError("gmd: matrix not square");
  const Eigen::Index n = a.rows();
  SortedSvd svd = sorted_svd(a);
  if (svd.singular[0] <= 1e-12 * svd.singular[n - 1])
    throw NumericError("gmd: input numerically rank deficient");

  double log_mean = 0;
  for (Eigen::Index i = 0; i < n; ++i) log_mean += std::log(svd.singular[i]);
  const double sbar = std::exp(log_mean / static_cast<double>(n));

  // Start from a = q * r * p^H with r = diag(sigma descending), then apply
  // 2x2 rotations that pin each diagonal entry to sbar while keeping r upper
  // triangular. One pass is exact; the loop guard only covers pathological
  // rounding.
  GmdFactorization out;
  out.q = cmat(n, n);
  cmat p(n, n);
  rvec d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d[i] = svd.singular[n - 1 - i];
    out.q.col(i) = svd.left.col(n - 1 - i);
    p.col(i) = svd.right.col(n - 1 - i);
  }
  out.r = cmat::Zero(n, n);
  out.r.diagonal() = d.cast<cplx>();

  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    // Bring a partner that brackets sbar next to position k.
    double dk = std::real(out.r(k, k));
    Eigen::Index j = k + 1;
    if (dk >= sbar) {
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (std::real(out.r(i, i)) < std::real(out.r(j, j))) j = i;
    } else {
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (std::real(out.r(i, i)) > std::real(out.r(j, j))) j = i;
    }
    if (j != k + 1) {
      out.r.row(j).swap(out.r.row(k + 1));
      out.r.col(j).swap(out.r.col(k + 1));
      out.q.col(j).swap(out.q.col(k + 1));
      p.col(j).swap(p.col(k + 1));
    }
    const double d1 = std::real(out.r(k, k));
    const double d2 = std::real(out.r(k + 1, k + 1));
    double c = 1.0, s = 0.0;
    if (std::abs(d1 - d2) > 1e-15 * std::max(d1, d2)) {
      double c2 = (sbar * sbar - d2 * d2) / (d1 * d1 - d2 * d2);
      c2 = std::clamp(c2, 0.0, 1.0);
      c = std::sqrt(c2);
      s = std::sqrt(1.0 - c2);
    }
    // Left factor (1/sbar)[c*d1, -s*d2; s*d2, c*d1] and right factor
    // [c, -s; s, c] map diag(d1, d2) to [sbar, x; 0, d1*d2/sbar].
    Eigen::Matrix2cd gl;
    gl << c * d1 / sbar, -s * d2 / sbar, s * d2 / sbar, c * d1 / sbar;
    Eigen::Matrix2cd grt;  // applied on the right of r
    grt << c, s, -s, c;
    out.r.middleRows(k, 2) = (gl * out.r.middleRows(k, 2)).eval();
    out.r.middleCols(k, 2) = (out.r.middleCols(k, 2) * grt).eval();
    out.q.middleCols(k, 2) = (out.q.middleCols(k, 2) * gl.adjoint()).eval();
    p.middleCols(k, 2) = (p.middleCols(k, 2) * grt).eval();
    out.r(k, k) = sbar;
    out.r(k + 1, k) = 0.0;
  }

  out.v1 = p.adjoint();
  return out;
}

}  // namespace scfde
