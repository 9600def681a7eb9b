#pragma once

#include <cstddef>
#include <vector>

#include "opucmat/mat2.hpp"
#include "opucmat/measures.hpp"
#include "opucmat/opuc.hpp"
#include "opucmat/poly.hpp"
#include "opucmat/sof.hpp"

namespace opucmat {

// Matrix polynomial F_n with f_n(z) = F_n(x) (1, y)^T for z = x + iy on the
// circle; row i is the xy-decomposition of component i. Degree n, leading
// coefficient C for n >= 1.
MatPoly2 matrix_poly_from_sof(const Vsof& f);

// Real and imaginary parts of the complex recurrence coefficients, giving the
// coupled pair (n >= 1)
//   x F_n = F_{n+1} + L_n F_n + M_n F_{n-1},
//   F_n Y = J F_{n+1} + Lt_n F_n + Mt_n F_{n-1},  Y = [[0, 1], [1 - x^2, 0]].
struct RealRecurrence {
  Mat2 L, M;
  Mat2 Lt, Mt;
};

RealRecurrence real_recurrence_coeffs(const SchurSequence& schur, std::size_t n);

// F_0..F_N from F_0 = C, F_1 = (x I - I + H(a_1)) C + I and the x-recurrence.
// Agrees with the xy route coefficient by coefficient.
std::vector<MatPoly2> matrix_poly_recurrence(const SchurSequence& schur,
                                             std::size_t N);

// Subleading structure: F_{n+1} = C x^{n+1} + [[eta, 0], [gamma, 1]] x^n + ...
// with eta_n + i gamma_n = (a_{2n+1} + b_{2n+1}) / 2.
struct LeadingData {
  double eta = 0.0;
  double gamma = 0.0;
  Mat2 Gamma;  // [[1, 0], [gamma, 1]]
};

LeadingData leading_data(const SchurSequence& schur, std::size_t n);

// Residuals of the quasi-orthogonality pattern of F_0..F_N against the matrix
// measure on [-1, 1] associated with m:
//   int F_n dOm x^k    = 0                 for k <= n - 2
//   int F_n dOm x^{n-1} = C_n (I - C) / 2
//   int F_n dOm F_m^T  = delta_{nm} C_n / 2
// where C_n is the Gram block of the head. All entries are absolute.
// int F dOmega G^T evaluated exactly through the circle moments: the row
// functions f_i(z) = F_i1(x) + y F_i2(x) restricted to |z| = 1 satisfy
// int F dOmega G^T = (1/2) int f g^T dmu entrywise (real part; the imaginary
// part vanishes identically).
Mat2 matrix_inner(const MatPoly2& F, const MatPoly2& G, const MomentFunctional& mf);

struct QuasiOrthRow {
  std::size_t n = 0;
  double low_moment = 0.0;  // max over k <= n - 2
  double top_moment = 0.0;
  double cross = 0.0;       // max over m < n
  double diagonal = 0.0;
};

std::vector<QuasiOrthRow> quasi_orthogonality_report(const SchurSequence& schur,
                                                     const CircleMeasure& m,
                                                     std::size_t N);

// P_n = (I - C) F_{n+1} + [[1, r_n], [0, 0]] F_n with
// r_n = Im a_{2n} / (1 + Re a_{2n}). Degree n, leading coefficient Gamma_n,
// and int P_n dOm x^k = 0 for every k < n.
MatPoly2 orthogonal_matrix_poly(const SchurSequence& schur, std::size_t n,
                                const MatPoly2& Fn, const MatPoly2& Fnext);
std::vector<MatPoly2> orthogonal_matrix_polys(const SchurSequence& schur,
                                              std::size_t N);

// Constant connection between the two families:
//   P_n = alpha F_{n+1} + beta_n F_n,  F_n = alpha_inv P_n + beta_inv_n P_{n-1},
// satisfying alpha alpha_inv = 0, beta_n beta_inv_n = 0 and
// alpha beta_inv_{n+1} + beta_n alpha_inv = I exactly.
struct ConnectionCoefficients {
  Mat2 alpha, beta;
  Mat2 alpha_inv, beta_inv;
};

ConnectionCoefficients connection_coefficients(const SchurSequence& schur,
                                               std::size_t n);

// gram = int P_n dOm P_n^T in closed form,
//   gram_n = 2^{-2n} diag(eps_{2n} / (1 + Re a_{2n}),
//                         eps_{2n+1} (1 + Re a_{2n+2}) / 4),
// and the diagonal scale with scale gram scale^T = I.
struct NormalizerData {
  Mat2 gram;
  Mat2 scale;
};

NormalizerData orthogonal_normalizer(const SchurSequence& schur, std::size_t n);

// Orthonormal family Q_n = rotation^T scale P_n, the rotation in SO(2) chosen
// so that the leading coefficient rotation^T scale Gamma_n is symmetric
// positive definite; int Q_n dOm Q_n^T = I. Throws std::domain_error if the
// rotation is undefined (never for |a_n| < 1).
struct OrthonormalPoly {
  MatPoly2 poly;
  Mat2 rotation;
  Mat2 leading;
};

OrthonormalPoly orthonormal_matrix_poly(const SchurSequence& schur, std::size_t n,
                                        const MatPoly2& Pn);
std::vector<OrthonormalPoly> orthonormal_matrix_polys(const SchurSequence& schur,
                                                      std::size_t N);

}  // namespace opucmat
