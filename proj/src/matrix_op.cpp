#include "opucmat/matrix_op.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opucmat {

MatPoly2 matrix_poly_from_sof(const Vsof& f) {
  auto [p1, q1] = xy_decompose(f.f1);
  auto [p2, q2] = xy_decompose(f.f2);
  MatPoly2 F;
  F(0, 0) = p1;
  F(0, 1) = q1;
  F(1, 0) = p2;
  F(1, 1) = q2;
  return F;
}

RealRecurrence real_recurrence_coeffs(const SchurSequence& schur, std::size_t n) {
  VsofRecurrence c = vsof_recurrence_coeffs(schur, n);
  return {real(c.L), real(c.M), imag(c.L), imag(c.M)};
}

std::vector<MatPoly2> matrix_poly_recurrence(const SchurSequence& schur,
                                             std::size_t N) {
  std::vector<MatPoly2> F;
  F.reserve(N + 1);
  F.push_back(MatPoly2::constant(C2));
  if (N == 0) return F;
  F.push_back(xshift(F[0]) +
              MatPoly2::constant((schur_matrix(schur.a(1)) - I2) * C2 + I2));
  for (std::size_t n = 1; n < N; ++n) {
    RealRecurrence rc = real_recurrence_coeffs(schur, n);
    F.push_back(xshift(F[n]) - rc.L * F[n] - rc.M * F[n - 1]);
  }
  return F;
}

namespace {

// b_n = sum_{k=1}^{n} a_k conj(a_{k-1})
cplx b_value(const SchurSequence& schur, std::size_t n) {
  cplx b = 0.0;
  for (std::size_t k = 1; k <= n; ++k) b += schur.a(k) * std::conj(schur.a(k - 1));
  return b;
}

double eps_value(const SchurSequence& schur, std::size_t n) {
  double eps = schur.eps0;
  for (std::size_t k = 1; k <= n; ++k) eps *= 1.0 - std::norm(schur.a(k));
  return eps;
}

double rotation_skew(const SchurSequence& schur, std::size_t n) {
  cplx a = schur.a(2 * n);
  return a.imag() / (1.0 + a.real());
}

}  // namespace

LeadingData leading_data(const SchurSequence& schur, std::size_t n) {
  cplx s = schur.a(2 * n + 1) + b_value(schur, 2 * n + 1);
  LeadingData d;
  d.eta = 0.5 * s.real();
  d.gamma = 0.5 * s.imag();
  d.Gamma = Mat2(1.0, 0.0, d.gamma, 1.0);
  return d;
}

Mat2 matrix_inner(const MatPoly2& F, const MatPoly2& G, const MomentFunctional& mf) {
  LaurentPoly f[2] = {laurent_from_xy(F(0, 0), F(0, 1)), laurent_from_xy(F(1, 0), F(1, 1))};
  LaurentPoly g[2] = {laurent_from_xy(G(0, 0), G(0, 1)), laurent_from_xy(G(1, 0), G(1, 1))};
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = 0.5 * mf.bilinear(f[i], g[j]).real();
  return r;
}

std::vector<QuasiOrthRow> quasi_orthogonality_report(const SchurSequence& schur,
                                                     const CircleMeasure& m,
                                                     std::size_t N) {
  MatrixMeasure om = associated_matrix_measure(m);
  std::vector<Vsof> fs = vsof_sequence(schur, N);
  std::vector<MatPoly2> F;
  F.reserve(fs.size());
  for (const Vsof& f : fs) F.push_back(matrix_poly_from_sof(f));

  std::vector<QuasiOrthRow> rows;
  rows.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    QuasiOrthRow row;
    row.n = n;
    Mat2 Cn = gram_block(schur, n);
    MatPoly2 xk = MatPoly2::constant(I2);
    for (std::size_t k = 0; k + 1 <= n; ++k) {
      Mat2 mom = matrix_inner(F[n], xk, om);
      if (k + 2 <= n) row.low_moment = std::max(row.low_moment, max_abs(mom));
      if (k + 1 == n) row.top_moment = max_abs(mom - 0.5 * (Cn * (I2 - C2)));
      xk = xshift(xk);
    }
    for (std::size_t j = 0; j < n; ++j)
      row.cross = std::max(row.cross, max_abs(matrix_inner(F[n], F[j], om)));
    row.diagonal = max_abs(matrix_inner(F[n], F[n], om) - 0.5 * Cn);
    rows.push_back(row);
  }
  return rows;
}

MatPoly2 orthogonal_matrix_poly(const SchurSequence& schur, std::size_t n,
                                const MatPoly2& Fn, const MatPoly2& Fnext) {
  Mat2 beta(1.0, rotation_skew(schur, n), 0.0, 0.0);
  return (I2 - C2) * Fnext + beta * Fn;
}

std::vector<MatPoly2> orthogonal_matrix_polys(const SchurSequence& schur,
                                              std::size_t N) {
  std::vector<MatPoly2> F = matrix_poly_recurrence(schur, N + 1);
  std::vector<MatPoly2> P;
  P.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    P.push_back(orthogonal_matrix_poly(schur, n, F[n], F[n + 1]));
  return P;
}

ConnectionCoefficients connection_coefficients(const SchurSequence& schur,
                                               std::size_t n) {
  double r = rotation_skew(schur, n);
  ConnectionCoefficients c;
  c.alpha = I2 - C2;
  c.beta = Mat2(1.0, r, 0.0, 0.0);
  c.alpha_inv = C2;
  c.beta_inv = Mat2(0.0, -r, 0.0, 1.0);
  return c;
}

NormalizerData orthogonal_normalizer(const SchurSequence& schur, std::size_t n) {
  double e2n = eps_value(schur, 2 * n);
  double e2n1 = e2n * (1.0 - std::norm(schur.a(2 * n + 1)));
  double p0 = 1.0 + schur.a(2 * n).real();
  double p1 = 1.0 + schur.a(2 * n + 2).real();
  double s = std::ldexp(1.0, -2 * static_cast<int>(n));
  NormalizerData d;
  d.gram = Mat2::diag(s * e2n / p0, 0.25 * s * e2n1 * p1);
  d.scale = Mat2::diag(std::ldexp(std::sqrt(p0 / e2n), static_cast<int>(n)),
                       std::ldexp(2.0 / std::sqrt(e2n1 * p1), static_cast<int>(n)));
  return d;
}

OrthonormalPoly orthonormal_matrix_poly(const SchurSequence& schur, std::size_t n,
                                        const MatPoly2& Pn) {
  NormalizerData nd = orthogonal_normalizer(schur, n);
  Mat2 K = nd.scale * leading_data(schur, n).Gamma;
  Mat2 theta = K - J2 * K * J2;
  double dt = det(theta);
  if (dt <= 0.0)
    throw std::domain_error("orthonormal_matrix_poly: no admissible rotation at index " +
                            std::to_string(n));
  Mat2 xi = (1.0 / std::sqrt(dt)) * theta;
  OrthonormalPoly q;
  q.rotation = xi;
  q.poly = transpose(xi) * (nd.scale * Pn);
  q.leading = transpose(xi) * K;
  return q;
}

std::vector<OrthonormalPoly> orthonormal_matrix_polys(const SchurSequence& schur,
                                                      std::size_t N) {
  std::vector<MatPoly2> P = orthogonal_matrix_polys(schur, N);
  std::vector<OrthonormalPoly> out;
  out.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n)
    out.push_back(orthonormal_matrix_poly(schur, n, P[n]));
  return out;
}

}  // namespace opucmat
