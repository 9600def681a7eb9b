#pragma once

#include <cstddef>
#include <vector>

#include "opucmat/mat2.hpp"
#include "opucmat/matrix_op.hpp"
#include "opucmat/measures.hpp"
#include "opucmat/opuc.hpp"

namespace opucmat {

// Scalar Szego function of the weight,
//   D(z) = exp( (1/4pi) int log w(theta) (e^{it}+z)/(e^{it}-z) dtheta ),
// summed over the measure's own grid. The formula is used on both sides of
// the circle: for |z| > 1 it evaluates to 1/conj(D(1/conj z)). Throws
// std::domain_error when the measure carries point masses, when the weight is
// not strictly positive on the grid, or when ||z| - 1| < 1e-8.
cplx szego_function(const CircleMeasure& m, cplx z);

// The root of z^2 - 2xz + 1 = 0 inside the unit disk (x = (z + 1/z)/2).
// Throws std::domain_error when x is within 1e-12 of [-1, 1].
cplx joukowski_inverse(cplx x);

// Szego data of a matrix measure dOmega = (1/2)[[r', s q'], [s q', s^2 r']]dx,
// s = sqrt(1-x^2), evaluated on its circle grid:
//   R(z)  = (1-z^2)/(4pi) int log det Omega'(x) / s / (1-2xz+z^2) dx
//   I(z)  = -z/(2pi) int log[(r'+q')/(r'-q')] / (1-2xz+z^2) dx
//   gamma = -(1/4pi) int log[(r'+q')/(r'-q')] dx
// Matches the circle-side D: for the associated measure of m and real z in
// (-1,1), D(z) = exp(R(z) + i I(z)) on the same grid.
struct SzegoData {
  std::vector<double> x;        // abscissas cos(theta_k), full grid
  std::vector<double> logdet;   // log det Omega'(x_k)
  std::vector<double> ratio_s;  // log[(r'+q')/(r'-q')](x_k) * s_k
  double h = 0.0;               // grid step 2pi/N
  double gamma = 0.0;

  double R(double z) const;
  double I(double z) const;
};

// Throws std::domain_error when dOmega carries point masses or the weight
// fails strict positivity on the grid.
SzegoData interval_szego_data(const MatrixMeasure& om);

// Matrix Szego function at real x off [-1, 1], with z the in-disk Joukowski
// root and g = gamma:
//   D(x) = e^{R(z)} / sqrt(9 + 4g^2) diag(1, x - z)
//          [[cos I(z), sin I(z)], [-sin I(z), cos I(z)]] [[3, -2g], [2gz, 3z]]
// The orthonormal family satisfies lim z^n Q_n(x) = (1/sqrt(2pi)) D(x)^{-1}.
Mat2 matrix_szego(const SzegoData& d, double x);

// err_n = max_abs(z^n Q_n(x) - limit) and rate_n = err_{n+1}/err_n (NaN on
// the last row or under a vanishing denominator).
// Pointwise limit of z(x)^n Q_n(x) for x outside [-1,1]:
// (2 pi)^{-1/2} matrix_szego(...)^{-1} on the interval Szego data of the
// projected measure.
Mat2 orthonormal_limit(const CircleMeasure& m, double x);

struct ConvergenceRow {
  std::size_t n = 0;
  double err = 0.0;
  double rate = 0.0;
};

// Convergence of the orthonormal family of the measure described by (m,
// schur) toward the Szego limit at real x off [-1, 1], n = 0..N.
std::vector<ConvergenceRow> convergence_report(const CircleMeasure& m,
                                               const SchurSequence& schur,
                                               double x, std::size_t N);

// Deviation of the scaled components from their limits, n = 0..N:
//   2^n z^n f_n(z) -> (1, i)^T D(0)/D(z),   |z| < 1,
//   2^n z^{-n} f_n(z) -> (1, -i)^T D(0) D(z), |z| > 1.
std::vector<double> vsof_limit_errors(const CircleMeasure& m,
                                      const SchurSequence& schur, cplx z,
                                      std::size_t N);

// gamma = Im(sum_k a_k conj(a_{k-1})) / 2, the series form of the interval
// integral above.
double gamma_limit(const SchurSequence& schur);

}  // namespace opucmat
