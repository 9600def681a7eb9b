#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "opucmat/mat2.hpp"
#include "opucmat/poly.hpp"

namespace opucmat {

inline constexpr std::size_t default_nodes = 4096;

struct CircleAtom {
  double theta;  // in [0, 2pi)
  double mass;   // > 0
};

// Measure on the unit circle: weight w(theta) plus finitely many point
// masses. Quadrature uses N midpoint-offset nodes theta_k = (k + 1/2) 2pi/N,
// exact for z^j with |j| < N and never touching theta = 0 or pi; the node set
// is closed under theta -> 2pi - theta, which the interval projections rely
// on. Signed weights are representable; operations that require positivity
// enforce it themselves (see positivity_check and schur_from_measure).
struct CircleMeasure {
  std::function<double(double)> weight;
  std::vector<CircleAtom> atoms;
  // Grid caches, size nodes: theta_k, z_k = e^{i theta_k}, qw_k = w(theta_k) 2pi/N.
  std::vector<double> theta, zre, zim, qw;

  explicit CircleMeasure(std::function<double(double)> w, std::vector<CircleAtom> atoms = {},
                         std::size_t nodes = default_nodes);

  std::size_t nodes() const { return theta.size(); }
  bool nonnegative_on_grid() const;
};

// Lebesgue measure d(theta), weight identically one.
CircleMeasure lebesgue_measure(std::size_t nodes = default_nodes);

// Values of a Laurent polynomial on the quadrature grid and at atom points.
struct CircleEval {
  std::vector<double> re, im;
  std::vector<cplx> at_atoms;
};

CircleEval eval_on_circle(const LaurentPoly& f, const CircleMeasure& m);

// integral f(z) conj(g(z)) dmu(theta)
cplx circle_inner(const CircleEval& f, const CircleEval& g, const CircleMeasure& m);
cplx circle_inner(const LaurentPoly& f, const LaurentPoly& g, const CircleMeasure& m);
cplx circle_inner(const ComplexPoly& f, const ComplexPoly& g, const CircleMeasure& m);

// Entrywise matrix of circle_inner values for two vectors of Laurent
// polynomials: result(i,j) = <f_i, g_j>.
CMat2 vector_inner(const LaurentPoly& f1, const LaurentPoly& f2, const LaurentPoly& g1,
                   const LaurentPoly& g2, const CircleMeasure& m);

// Pullback under theta -> 2pi - theta.
CircleMeasure symmetric_measure(const CircleMeasure& m);

struct IntervalAtom {
  double x;
  double mass;
};

// Measure on [-1,1] with a density w.r.t. dx plus point masses.
struct ProjectedMeasure {
  std::function<double(double)> weight;
  std::vector<IntervalAtom> atoms;
};

struct ProjectedPair {
  ProjectedMeasure nu1;  // from the closed upper half-circle
  ProjectedMeasure nu2;  // from the open lower half-circle
};

// nu1' (x) = w(arccos x)/sqrt(1-x^2), nu2'(x) = w(2pi - arccos x)/sqrt(1-x^2);
// atoms map atom(theta) -> atom(cos theta) on the half containing theta.
ProjectedPair project_measures(const CircleMeasure& m);

struct MatrixAtom {
  double x;
  Mat2 mass;  // symmetric nonnegative definite for genuine measures
};

// 2x2 matrix measure on [-1,1]:
//   dOmega = (1/2) [[rho', s sigma'], [s sigma', s^2 rho']] dx,  s = sqrt(1-x^2),
// plus matrix point masses. Quadrature pulls back to the circle grid through
// x = cos theta, with the node weights folded into w11/w12/w22 so that
// int F dOmega G^T sums dot3 reductions per entry pair.
struct MatrixMeasure {
  std::function<double(double)> rho;    // rho'(x)
  std::function<double(double)> sigma;  // sigma'(x)
  std::vector<MatrixAtom> atoms;
  // Grid caches, size nodes: x_k = cos theta_k, s_k = |sin theta_k|, raw
  // densities rho_g/sigma_g at x_k, and folded weights
  //   w11_k = (pi/2N) s_k rho_k, w12_k = (pi/2N) s_k^2 sigma_k,
  //   w22_k = (pi/2N) s_k^3 rho_k.
  std::vector<double> x, s, rho_g, sigma_g, w11, w12, w22;

  MatrixMeasure(std::function<double(double)> rho, std::function<double(double)> sigma,
                std::vector<MatrixAtom> atoms = {}, std::size_t nodes = default_nodes);

  std::size_t nodes() const { return x.size(); }
};

// dOmega built from the projections of a circle measure; shares its grid size.
MatrixMeasure associated_matrix_measure(const CircleMeasure& m);

// integral F(x) dOmega(x) G(x)^T
Mat2 matrix_inner(const MatPoly2& F, const MatPoly2& G, const MatrixMeasure& om);

struct WeightViolation {
  double x;
  double rho;
  double sigma;
};

struct AtomViolation {
  std::size_t index;
  Mat2 mass;
};

// |sigma'| <= rho' on the grid and nonnegative definite atoms. Up to 16
// located weight violations are kept; the count covers all of them.
struct PositivityReport {
  bool ok = true;
  std::size_t weight_violation_count = 0;
  std::vector<WeightViolation> weight_violations;
  std::vector<AtomViolation> atom_violations;

  explicit operator bool() const { return ok; }
};

PositivityReport positivity_check(const MatrixMeasure& om);

}  // namespace opucmat
