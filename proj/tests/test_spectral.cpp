#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "scfde/spectral.hpp"

using namespace scfde;

TEST_CASE("dft matrix definition and unitarity", "[spectral]") {
  CHECK(dft_matrix(1)(0, 0) == cplx(1.0, 0.0));

  cmat f2 = dft_matrix(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - cplx(r, 0)) < 1e-15);
  CHECK(std::abs(f2(0, 1) - cplx(r, 0)) < 1e-15);
  CHECK(std::abs(f2(1, 0) - cplx(r, 0)) < 1e-15);
  CHECK(std::abs(f2(1, 1) - cplx(-r, 0)) < 1e-15);

  cmat f8 = dft_matrix(8);
  CHECK(max_abs(f8 * f8.adjoint() - cmat::Identity(8, 8)) < 1e-12);

  CHECK_THROWS_AS(dft_matrix(0), DimensionError);
}

TEST_CASE("taps_to_tones trivial filters", "[spectral]") {
  std::vector<cmat> taps{cmat::Identity(2, 2)};
  auto tones = taps_to_tones(taps, 4);
  REQUIRE(tones.size() == 4);
  for (const cmat& t : tones) CHECK(max_abs(t - cmat::Identity(2, 2)) < 1e-14);

  std::vector<cmat> delay{cmat::Zero(2, 2), cmat::Identity(2, 2)};
  tones = taps_to_tones(delay, 4);
  for (int k = 0; k < 4; ++k) {
    cmat want = std::polar(1.0, -M_PI * k / 2.0) * cmat::Identity(2, 2);
    CHECK(max_abs(tones[k] - want) < 1e-14);
  }

  std::vector<cmat> toomany(5, cmat::Identity(1, 1));
  CHECK_THROWS_AS(taps_to_tones(toomany, 4), DimensionError);
}

TEST_CASE("taps_to_tones matches dense block-circulant diagonalization",
          "[spectral]") {
  Rng rng(7);
  const int n_c = 8, L = 3;
  std::vector<cmat> taps;
  for (int l = 0; l < L; ++l) taps.push_back(random_complex(rng, 2, 2));
  auto tones = taps_to_tones(taps, n_c);

  cmat big = oracles::blkcirc(taps, n_c);
  cmat f = oracles::kron(dft_matrix(n_c), cmat::Identity(2, 2));
  cmat diag = f * big * f.adjoint();
  for (int k = 0; k < n_c; ++k) {
    CHECK(max_abs(diag.block(2 * k, 2 * k, 2, 2) - tones[k]) < 1e-10);
    for (int j = 0; j < n_c; ++j)
      if (j != k) CHECK(max_abs(diag.block(2 * k, 2 * j, 2, 2)) < 1e-10);
  }
}

TEST_CASE("tone inversion returns the zero-padded taps", "[spectral]") {
  Rng rng(11);
  const int n_c = 8, L = 3;
  std::vector<cmat> taps;
  for (int l = 0; l < L; ++l) taps.push_back(random_complex(rng, 3, 2));
  auto back = tones_to_taps(taps_to_tones(taps, n_c));
  REQUIRE(back.size() == static_cast<size_t>(n_c));
  for (int l = 0; l < n_c; ++l) {
    cmat want = l < L ? taps[l] : cmat::Zero(3, 2);
    CHECK(max_abs(back[l] - want) < 1e-10);
  }
}

TEST_CASE("block dft round trip and unitarity", "[spectral]") {
  Rng rng(3);
  cmat x = random_complex(rng, 3, 8);
  cmat xf = block_dft(x);
  CHECK(std::abs(x.squaredNorm() - xf.squaredNorm()) < 1e-10 * x.squaredNorm());
  CHECK(max_abs(block_idft(xf) - x) < 1e-12);
}

TEST_CASE("sorted svd on fixed inputs", "[spectral]") {
  auto s1 = sorted_svd(cmat::Identity(3, 3));
  for (int i = 0; i < 3; ++i) CHECK(s1.singular[i] == Catch::Approx(1.0));

  cmat d(2, 2);
  d << 3, 0, 0, 1;
  auto s2 = sorted_svd(d);
  CHECK(s2.singular[0] == Catch::Approx(1.0));
  CHECK(s2.singular[1] == Catch::Approx(3.0));
  CHECK(max_abs(s2.reconstruct() - d) < 1e-12);

  cmat bad = cmat::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sorted_svd(bad), NumericError);
}

TEST_CASE("sorted svd reconstruction and ordering on random shapes",
          "[spectral]") {
  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + rng.uniform_int(4);
    int cols = 1 + rng.uniform_int(4);
    cmat a = random_complex(rng, rows, cols);
    auto svd = sorted_svd(a);
    CHECK(rel_frobenius_error(svd.reconstruct(), a) < 1e-10);
    CHECK(is_unitary(svd.left));
    CHECK(is_unitary(svd.right));
    for (Eigen::Index i = 0; i + 1 < svd.singular.size(); ++i)
      CHECK(svd.singular[i] <= svd.singular[i + 1] + 1e-14);
  }
}

TEST_CASE("sorted svd singular values match brute-force eigenvalues",
          "[spectral]") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + rng.uniform_int(3);
    int cols = 2 + rng.uniform_int(3);
    cmat a = random_complex(rng, rows, cols);
    auto svd = sorted_svd(a);
    rvec ev = oracles::jacobi_eigenvalues(a.adjoint() * a);
    // a^H a has cols eigenvalues; the smallest cols-p are implicit zeros.
    const Eigen::Index p = svd.singular.size();
    for (Eigen::Index i = 0; i < p; ++i) {
      double want = std::sqrt(std::max(0.0, ev[ev.size() - p + i]));
      CHECK(svd.singular[i] == Catch::Approx(want).margin(1e-9));
    }
  }
}

TEST_CASE("svd phase convention is reproducible", "[spectral]") {
  Rng rng1(5), rng2(5);
  cmat a = random_complex(rng1, 3, 3);
  cmat b = random_complex(rng2, 3, 3);
  auto sa = sorted_svd(a);
  auto sb = sorted_svd(b);
  CHECK(max_abs(sa.left - sb.left) == 0.0);
  for (int c = 0; c < 3; ++c) {
    Eigen::Index imax = 0;
    sa.left.col(c).cwiseAbs().maxCoeff(&imax);
    CHECK(std::abs(std::imag(sa.left(imax, c))) < 1e-12);
    CHECK(std::real(sa.left(imax, c)) > 0);
  }
}

TEST_CASE("ldl on fixed inputs", "[spectral]") {
  auto f1 = ldl(cmat::Identity(2, 2));
  CHECK(max_abs(f1.unit_lower - cmat::Identity(2, 2)) < 1e-15);
  CHECK(f1.diag[0] == Catch::Approx(1.0));

  cmat a(2, 2);
  a << 2, 1, 1, 2;
  auto f2 = ldl(a);
  CHECK(std::abs(f2.unit_lower(1, 0) - cplx(0.5, 0)) < 1e-15);
  CHECK(f2.diag[0] == Catch::Approx(2.0));
  CHECK(f2.diag[1] == Catch::Approx(1.5));
  CHECK(max_abs(f2.reconstruct() - a) < 1e-12);

  cmat indef(2, 2);
  indef << 1, 2, 2, 1;
  CHECK_THROWS_AS(ldl(indef), NumericError);

  cmat nonherm(2, 2);
  nonherm << 1, 2, 0, 1;
  CHECK_THROWS_AS(ldl(nonherm), NumericError);
}

TEST_CASE("ldl round trip on random hermitian positive definite matrices",
          "[spectral]") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + rng.uniform_int(8);
    cmat b = random_complex(rng, n, n);
    cmat a = b * b.adjoint() + 0.1 * cmat::Identity(n, n);
    a = 0.5 * (a + a.adjoint()).eval();
    auto f = ldl(a);
    CHECK(rel_frobenius_error(f.reconstruct(), a) < 1e-9);
    CHECK(f.diag.minCoeff() > 0);
    for (int i = 0; i < n; ++i) {
      CHECK(f.unit_lower(i, i) == cplx(1.0, 0.0));
      for (int j = i + 1; j < n; ++j) CHECK(f.unit_lower(i, j) == cplx(0.0, 0.0));
    }
  }
}

TEST_CASE("gmd on fixed inputs", "[spectral]") {
  auto g1 = gmd(cmat::Identity(2, 2));
  CHECK(max_abs(g1.q * g1.r - cmat(cmat::Identity(2, 2) * g1.v1.adjoint())) <
        1e-12);
  CHECK(std::abs(g1.r(0, 0) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(g1.r(1, 1) - cplx(1, 0)) < 1e-12);

  cmat d(2, 2);
  d << 4, 0, 0, 1;
  auto g2 = gmd(d);
  CHECK(std::real(g2.r(0, 0)) == Catch::Approx(2.0));
  CHECK(std::real(g2.r(1, 1)) == Catch::Approx(2.0));
  CHECK(max_abs(g2.q * g2.r - cmat(d * g2.v1.adjoint())) < 1e-10);

  // Singular values (9, 3, 1) force diagonal 3 (cube root of 27).
  Rng rng(41);
  cmat u = random_unitary(rng, 3), v = random_unitary(rng, 3);
  rvec sv(3);
  sv << 1, 3, 9;
  cmat a = u * sv.asDiagonal() * v.adjoint();
  auto g3 = gmd(a);
  for (int i = 0; i < 3; ++i)
    CHECK(std::real(g3.r(i, i)) == Catch::Approx(3.0).epsilon(1e-8));

  cmat rank_def(2, 2);
  rank_def << 1, 0, 0, 0;
  CHECK_THROWS_AS(gmd(rank_def), NumericError);
}

TEST_CASE("gmd invariants on random matrices", "[spectral]") {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng.uniform_int(4);
    cmat a = random_complex(rng, n, n) + 2.0 * cmat::Identity(n, n);
    auto g = gmd(a);
    CHECK(is_unitary(g.q));
    CHECK(is_unitary(g.v1));
    CHECK(rel_frobenius_error(g.q * g.r, a * g.v1.adjoint()) < 1e-10);
    // Upper triangular with equal diagonal.
    double dmin = 1e300, dmax = 0;
    for (int i = 0; i < n; ++i) {
      dmin = std::min(dmin, std::real(g.r(i, i)));
      dmax = std::max(dmax, std::real(g.r(i, i)));
      for (int j = 0; j < i; ++j) CHECK(std::abs(g.r(i, j)) < 1e-12);
    }
    CHECK((dmax - dmin) / dmax < 1e-8);
    CHECK(std::abs(std::abs(g.r.determinant()) - std::abs(a.determinant())) <
          1e-8 * std::abs(a.determinant()));
  }
}

TEST_CASE("top streams pair columns with the largest singular values",
          "[spectral]") {
  Rng rng(53);
  cmat a = random_complex(rng, 4, 3);
  auto svd = sorted_svd(a);
  auto top = top_streams(svd, 2);
  CHECK(top.sigma[0] >= top.sigma[1]);
  CHECK(top.sigma[0] == Catch::Approx(svd.singular[svd.singular.size() - 1]));
  for (int m = 0; m < 2; ++m)
    CHECK(max_abs(a * top.v.col(m) - top.sigma[m] * top.u.col(m)) < 1e-10);
  CHECK_THROWS_AS(top_streams(svd, 5), DimensionError);
}
