#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "opucmat/matrix_op.hpp"
#include "testutil.hpp"

using namespace opucmat;

namespace {

double poly_diff(const MatPoly2& a, const MatPoly2& b) { return max_coeff(a - b); }

MatPoly2 y_multiplier() {
  MatPoly2 y;
  y(0, 1) = RealPoly({1.0});
  y(1, 0) = RealPoly({1.0, 0.0, -1.0});
  return y;
}

}  // namespace

TEST_CASE("matrix polynomials from the xy route") {
  SchurSequence zero{};
  MatPoly2 f0 = matrix_poly_from_sof(vsof(zero, 0));
  CHECK(f0.degree() == 0);
  CHECK(max_abs(f0.coeff(0) - C2) == 0.0);

  // Free case: F_n = diag(That_n, Uhat_{n-1}).
  for (std::size_t n : {1, 2, 3, 5}) {
    MatPoly2 f = matrix_poly_from_sof(vsof(zero, n));
    CHECK(testutil::max_diff(f(0, 0), cheb1_monic(n)) == 0.0);
    CHECK(testutil::max_diff(f(1, 1), cheb2_monic(n - 1)) == 0.0);
    CHECK(f(0, 1).degree() == -1);
    CHECK(f(1, 0).degree() == -1);
  }

  SchurSequence s({cplx(0.5, 0.0)});
  MatPoly2 f1 = matrix_poly_from_sof(vsof(s, 1));
  CHECK(testutil::max_diff(f1(0, 0), RealPoly({0.5, 1.0})) == 0.0);
  CHECK(testutil::max_diff(f1(1, 1), RealPoly({1.0})) == 0.0);
  CHECK(f1(0, 1).degree() == -1);
  CHECK(f1(1, 0).degree() == -1);
}

TEST_CASE("real recurrence coefficients in the free case") {
  SchurSequence zero{};
  RealRecurrence r1 = real_recurrence_coeffs(zero, 1);
  CHECK(max_abs(r1.L) == 0.0);
  CHECK(max_abs(r1.Lt) == 0.0);
  CHECK(max_abs(r1.M - 0.5 * C2) == 0.0);
  CHECK(max_abs(r1.Mt - Mat2(0.0, 0.0, 0.5, 0.0)) == 0.0);
  for (std::size_t n : {2, 3, 7}) {
    RealRecurrence r = real_recurrence_coeffs(zero, n);
    CHECK(max_abs(r.L) == 0.0);
    CHECK(max_abs(r.Lt) == 0.0);
    CHECK(max_abs(r.M - 0.25 * I2) == 0.0);
    CHECK(max_abs(r.Mt - (-0.25) * J2) == 0.0);
  }
}

TEST_CASE("recurrence route agrees with the xy route") {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    SchurSequence s(testutil::random_head(seed, 10));
    std::vector<MatPoly2> fr = matrix_poly_recurrence(s, 15);
    for (std::size_t n = 0; n <= 15; ++n) {
      MatPoly2 fx = matrix_poly_from_sof(vsof(s, n));
      double scale = std::max(1.0, max_coeff(fx));
      CHECK(poly_diff(fr[n], fx) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("second recurrence pairs with multiplication by y") {
  SchurSequence s(testutil::random_head(11, 9));
  std::vector<MatPoly2> f = matrix_poly_recurrence(s, 9);
  MatPoly2 y = y_multiplier();
  for (std::size_t n = 1; n <= 8; ++n) {
    RealRecurrence rc = real_recurrence_coeffs(s, n);
    MatPoly2 lhs = f[n] * y;
    MatPoly2 rhs = J2 * f[n + 1] + rc.Lt * f[n] + rc.Mt * f[n - 1];
    CHECK(poly_diff(lhs, rhs) <= 1e-12 * std::max(1.0, max_coeff(lhs)));
  }
}

TEST_CASE("leading data") {
  LeadingData d0 = leading_data(SchurSequence({cplx(0.5, 0.0)}), 0);
  CHECK(d0.eta == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d0.gamma == 0.0);

  LeadingData di = leading_data(SchurSequence({cplx(0.0, 0.5)}), 0);
  CHECK(di.eta == 0.0);
  CHECK(di.gamma == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(max_abs(di.Gamma - Mat2(1.0, 0.0, 0.5, 1.0)) <= 1e-15);

  SchurSequence s(testutil::random_head(31, 8));
  std::vector<MatPoly2> f = matrix_poly_recurrence(s, 7);
  for (std::size_t n = 0; n + 1 <= 7; ++n) {
    LeadingData d = leading_data(s, n);
    CHECK(max_abs(f[n + 1].coeff(static_cast<int>(n) + 1) - C2) <= 1e-12);
    Mat2 sub(d.eta, 0.0, d.gamma, 1.0);
    CHECK(max_abs(f[n + 1].coeff(static_cast<int>(n)) - sub) <= 1e-12);
  }
}

TEST_CASE("quasi-orthogonality residuals vanish") {
  SchurSequence zero{};
  CircleMeasure leb = lebesgue_measure();
  for (const QuasiOrthRow& row : quasi_orthogonality_report(zero, leb, 5)) {
    CHECK(row.low_moment <= 1e-12 * two_pi);
    CHECK(row.top_moment <= 1e-12 * two_pi);
    CHECK(row.cross <= 1e-12 * two_pi);
    CHECK(row.diagonal <= 1e-12 * two_pi);
  }

  SchurSequence s(testutil::random_head(3, 4));
  CircleMeasure m = bernstein_szego_measure(s, 8192);
  for (const QuasiOrthRow& row : quasi_orthogonality_report(s, m, 5)) {
    CHECK(row.low_moment <= 1e-8 * s.eps0);
    CHECK(row.top_moment <= 1e-8 * s.eps0);
    CHECK(row.cross <= 1e-8 * s.eps0);
    CHECK(row.diagonal <= 1e-8 * s.eps0);
  }
}

TEST_CASE("orthogonal family in the free case") {
  SchurSequence zero{};
  std::vector<MatPoly2> p = orthogonal_matrix_polys(zero, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(testutil::max_diff(p[n](0, 0), cheb1_monic(n)) <= 1e-15);
    CHECK(testutil::max_diff(p[n](1, 1), cheb2_monic(n)) <= 1e-15);
    CHECK(p[n](0, 1).degree() == -1);
    CHECK(p[n](1, 0).degree() == -1);
  }
}

TEST_CASE("connection between the families") {
  SchurSequence s(testutil::random_head(17, 9));
  std::vector<MatPoly2> f = matrix_poly_recurrence(s, 9);
  std::vector<MatPoly2> p = orthogonal_matrix_polys(s, 9);
  for (std::size_t n = 1; n <= 8; ++n) {
    ConnectionCoefficients c = connection_coefficients(s, n);
    ConnectionCoefficients cn = connection_coefficients(s, n + 1);
    CHECK(max_abs(c.alpha * c.alpha_inv) == 0.0);
    CHECK(max_abs(c.beta * c.beta_inv) == 0.0);
    CHECK(max_abs(c.alpha * cn.beta_inv + c.beta * c.alpha_inv - I2) == 0.0);

    MatPoly2 back = c.alpha_inv * p[n] + c.beta_inv * p[n - 1];
    CHECK(poly_diff(back, f[n]) <= 1e-12 * std::max(1.0, max_coeff(f[n])));

    LeadingData d = leading_data(s, n);
    CHECK(max_abs(p[n].coeff(static_cast<int>(n)) - d.Gamma) <= 1e-12);
  }
}

TEST_CASE("orthogonality of the monic-type family under quadrature") {
  SchurSequence s(testutil::random_head(21, 5));
  CircleMeasure m = bernstein_szego_measure(s, 8192);
  MatrixMeasure om = associated_matrix_measure(m);
  std::vector<MatPoly2> p = orthogonal_matrix_polys(s, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    MatPoly2 xk = MatPoly2::constant(I2);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(max_abs(matrix_inner(p[n], xk, om)) <= 1e-8 * s.eps0);
      xk = xshift(xk);
    }
    for (std::size_t j = 0; j <= 6; ++j) {
      Mat2 g = matrix_inner(p[n], p[j], om);
      if (j != n) {
        CHECK(max_abs(g) <= 1e-8 * s.eps0);
      } else {
        CHECK(max_abs(g - orthogonal_normalizer(s, n).gram) <= 1e-8 * s.eps0);
      }
    }
  }
}

TEST_CASE("normalizers") {
  SchurSequence zero{};
  NormalizerData n0 = orthogonal_normalizer(zero, 0);
  CHECK(max_abs(n0.gram - Mat2::diag(pi, pi / 2)) <= 1e-15);
  for (std::size_t n : {1, 2, 5}) {
    NormalizerData nd = orthogonal_normalizer(zero, n);
    double s = std::ldexp(1.0, -2 * static_cast<int>(n));
    CHECK(max_abs(nd.gram - Mat2::diag(s * two_pi, s * pi / 2)) <= 1e-15);
  }

  SchurSequence s(testutil::random_head(41, 7));
  for (std::size_t n = 0; n <= 6; ++n) {
    NormalizerData nd = orthogonal_normalizer(s, n);
    Mat2 unit = nd.scale * nd.gram * transpose(nd.scale);
    CHECK(max_abs(unit - I2) <= 1e-14);
  }
}

TEST_CASE("orthonormal family") {
  SchurSequence zero{};
  std::vector<OrthonormalPoly> qz = orthonormal_matrix_polys(zero, 4);
  for (const OrthonormalPoly& q : qz) CHECK(max_abs(q.rotation - I2) == 0.0);

  SchurSequence s(testutil::random_head(55, 5));
  CircleMeasure m = bernstein_szego_measure(s, 8192);
  MatrixMeasure om = associated_matrix_measure(m);
  std::vector<OrthonormalPoly> qs = orthonormal_matrix_polys(s, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    const OrthonormalPoly& q = qs[n];
    CHECK(max_abs(transpose(q.rotation) * q.rotation - I2) <= 1e-14);
    CHECK(det(q.rotation) == doctest::Approx(1.0).epsilon(1e-13));

    // Leading coefficient is symmetric positive definite.
    double scale = max_abs(q.leading);
    CHECK(std::abs(q.leading(0, 1) - q.leading(1, 0)) <= 1e-13 * scale);
    CHECK(trace(q.leading) > 0.0);
    CHECK(det(q.leading) > 0.0);
    CHECK(max_abs(q.poly.coeff(static_cast<int>(n)) - q.leading) <= 1e-12 * scale);

    CHECK(max_abs(matrix_inner(q.poly, q.poly, om) - I2) <= 1e-8);
  }
}

TEST_CASE("real heads stay diagonal") {
  std::mt19937_64 rng(77);
  std::vector<cplx> head;
  for (int k = 0; k < 6; ++k) head.emplace_back(testutil::uniform(rng, -0.8, 0.8), 0.0);
  SchurSequence s(head);
  std::vector<MatPoly2> f = matrix_poly_recurrence(s, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    double scale = std::max(1.0, max_coeff(f[n]));
    CHECK(testutil::max_diff(f[n](0, 1), RealPoly{}) <= 1e-14 * scale);
    CHECK(testutil::max_diff(f[n](1, 0), RealPoly{}) <= 1e-14 * scale);
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(leading_data(s, n).gamma == 0.0);
    CHECK(max_abs(orthonormal_matrix_poly(s, n, orthogonal_matrix_polys(s, n)[n]).rotation - I2) <= 1e-15);
  }
}

TEST_CASE("interval inner products through moments match quadrature") {
  SchurSequence s(testutil::random_head(23, 4));
  CircleMeasure m = bernstein_szego_measure(s, 8192);
  MatrixMeasure om = associated_matrix_measure(m);
  MomentFunctional mf = moment_functional(s, 20);
  std::vector<MatPoly2> f = matrix_poly_recurrence(s, 5);
  std::vector<MatPoly2> p = orthogonal_matrix_polys(s, 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t j = 0; j <= 4; ++j) {
      CHECK(testutil::max_diff(matrix_inner(f[n], p[j], om), matrix_inner(f[n], p[j], mf)) <=
            1e-9 * s.eps0);
      CHECK(testutil::max_diff(matrix_inner(p[n], p[j], om), matrix_inner(p[n], p[j], mf)) <=
            1e-9 * s.eps0);
    }
}
