#include "opucmat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "opucmat/matrix_op.hpp"
#include "opucmat/sof.hpp"

namespace opucmat {

void RunReport::add(std::string name, double residual, double tol) {
  bool ok = residual <= tol;
  checks.push_back({std::move(name), residual, tol, ok});
  pass = pass && ok;
}

namespace {

// Inner products against the measure under test. When the Schur head is
// given, the measure is the matching Bernstein-Szego weight and everything is
// evaluated exactly through its circle moments; otherwise grid quadrature on
// the supplied measure is used.
struct InnerEngine {
  const CircleMeasure* m = nullptr;
  const MatrixMeasure* om = nullptr;
  const MomentFunctional* mf = nullptr;

  cplx circle(const LaurentPoly& f, const LaurentPoly& g) const {
    return mf ? mf->sesquilinear(f, g) : circle_inner(f, g, *m);
  }
  CMat2 pair_gram(const Vsof& f, const Vsof& g) const {
    return mf ? vsof_inner(f, g, *mf) : vsof_inner(f, g, *m);
  }
  Mat2 interval(const MatPoly2& F, const MatPoly2& G) const {
    return mf ? matrix_inner(F, G, *mf) : matrix_inner(F, G, *om);
  }
};

// Residual of the positivity report: the largest |sigma'| - rho' excess over
// the located grid violations, or 1 per violating atom; 0 when positive.
double positivity_residual(const PositivityReport& rep) {
  if (rep.ok) return 0.0;
  double r = 0.0;
  for (const auto& v : rep.weight_violations) r = std::max(r, std::abs(v.sigma) - v.rho);
  if (!rep.atom_violations.empty()) r = std::max(r, 1.0);
  if (r <= 0.0) r = 1.0;  // violations beyond the kept sample
  return r;
}

double circle_norm_residual(const InnerEngine& e, const SchurSequence& schur, std::size_t K) {
  OpucSequences seq = derived_sequences(schur, K);
  std::vector<LaurentPoly> lp;
  lp.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) lp.emplace_back(0, seq.phi[k].c);
  double r = 0.0;
  for (std::size_t k = 0; k <= K; ++k) {
    for (std::size_t j = 0; j < k; ++j) r = std::max(r, std::abs(e.circle(lp[k], lp[j])));
    r = std::max(r, std::abs(e.circle(lp[k], lp[k]) - seq.eps[k]));
  }
  return r / schur.eps0;
}

double dual_route_residual(const SchurSequence& schur, std::size_t N) {
  std::vector<MatPoly2> fr = matrix_poly_recurrence(schur, N);
  double r = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    MatPoly2 fx = matrix_poly_from_sof(vsof(schur, n));
    r = std::max(r, max_coeff(fr[n] - fx) / std::max(1.0, max_coeff(fr[n])));
  }
  return r;
}

double gram_block_residual(const InnerEngine& e, const SchurSequence& schur, std::size_t N) {
  std::vector<Vsof> f = vsof_sequence(schur, N);
  double r = 0.0;
  for (std::size_t n = 0; n <= N; ++n)
    for (std::size_t j = 0; j <= n; ++j) {
      CMat2 g = e.pair_gram(f[n], f[j]);
      if (j == n) g = g - CMat2(gram_block(schur, n));
      r = std::max(r, max_abs(g));
    }
  return r / schur.eps0;
}

double quasi_orth_residual(const InnerEngine& e, const SchurSequence& schur,
                           const std::vector<MatPoly2>& f, std::size_t N) {
  double r = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    Mat2 cn = gram_block(schur, n);
    MatPoly2 xk = MatPoly2::constant(I2);
    for (std::size_t k = 0; k + 1 <= n; ++k) {
      Mat2 mom = e.interval(f[n], xk);
      if (k + 2 <= n) r = std::max(r, max_abs(mom));
      if (k + 1 == n) r = std::max(r, max_abs(mom - 0.5 * (cn * (I2 - C2))));
      xk = xshift(xk);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      Mat2 g = e.interval(f[n], f[j]);
      if (j == n) g = g - 0.5 * cn;
      r = std::max(r, max_abs(g));
    }
  }
  return r / schur.eps0;
}

double monic_orth_residual(const InnerEngine& e, const SchurSequence& schur,
                           const std::vector<MatPoly2>& p, std::size_t N) {
  double r = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    MatPoly2 xk = MatPoly2::constant(I2);
    for (std::size_t k = 0; k < n; ++k) {
      r = std::max(r, max_abs(e.interval(p[n], xk)));
      xk = xshift(xk);
    }
    for (std::size_t j = 0; j <= n; ++j) {
      Mat2 g = e.interval(p[n], p[j]);
      if (j == n) g = g - orthogonal_normalizer(schur, n).gram;
      r = std::max(r, max_abs(g));
    }
  }
  return r / schur.eps0;
}

double orthonormal_residual(const InnerEngine& e, const SchurSequence& schur, std::size_t N) {
  std::vector<OrthonormalPoly> q = orthonormal_matrix_polys(schur, N);
  double r = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    r = std::max(r, max_abs(transpose(q[n].rotation) * q[n].rotation - I2));
    const Mat2& lead = q[n].leading;
    r = std::max(r, std::abs(lead(0, 1) - lead(1, 0)) / std::max(1.0, max_abs(lead)));
    if (!(trace(lead) > 0.0) || !(det(lead) > 0.0)) r = std::max(r, 1.0);
    for (std::size_t j = 0; j <= n; ++j) {
      Mat2 g = e.interval(q[n].poly, q[j].poly);
      if (j == n) g = g - I2;
      r = std::max(r, max_abs(g));
    }
  }
  return r;
}

double connection_residual(const SchurSequence& schur, const std::vector<MatPoly2>& f,
                           const std::vector<MatPoly2>& p, std::size_t N) {
  double r = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    ConnectionCoefficients c = connection_coefficients(schur, n);
    ConnectionCoefficients cn = connection_coefficients(schur, n + 1);
    r = std::max(r, max_abs(c.alpha * c.alpha_inv));
    r = std::max(r, max_abs(c.beta * c.beta_inv));
    r = std::max(r, max_abs(c.alpha * cn.beta_inv + c.beta * c.alpha_inv - I2));
    MatPoly2 fwd = c.alpha * f[n + 1] + c.beta * f[n];
    r = std::max(r, max_coeff(fwd - p[n]) / std::max(1.0, max_coeff(p[n])));
    MatPoly2 back = c.alpha_inv * p[n] + c.beta_inv * p[n - 1];
    r = std::max(r, max_coeff(back - f[n]) / std::max(1.0, max_coeff(f[n])));
  }
  return r;
}

RunReport verify_impl(const CircleMeasure& m, const SchurSequence* head, std::size_t N,
                      double tol) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;

  MatrixMeasure om = associated_matrix_measure(m);
  PositivityReport pos = positivity_check(om);
  rep.add("measure positivity", positivity_residual(pos), 0.0);
  if (!rep.pass) {
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  SchurSequence schur;
  MomentFunctional mf;
  InnerEngine engine{&m, &om, nullptr};
  if (head) {
    schur = *head;
    mf = moment_functional(schur, 2 * N + 6);
    engine.mf = &mf;
  } else {
    try {
      schur = schur_from_measure(m, 2 * N + 3);
    } catch (const std::domain_error&) {
      rep.add("head recovery", 1.0, 0.0);
      rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      return rep;
    }
    rep.add("head recovery", 0.0, 0.0);
  }

  std::vector<MatPoly2> f = matrix_poly_recurrence(schur, N + 1);
  std::vector<MatPoly2> p = orthogonal_matrix_polys(schur, N);

  rep.add("circle norms", circle_norm_residual(engine, schur, 2 * N + 2), tol);
  rep.add("dual construction routes", dual_route_residual(schur, N + 1), tol);
  rep.add("two-sided gram blocks", gram_block_residual(engine, schur, N), tol);
  rep.add("quasi-orthogonality", quasi_orth_residual(engine, schur, f, N), tol);
  rep.add("monic-type orthogonality", monic_orth_residual(engine, schur, p, N), tol);
  rep.add("orthonormal family", orthonormal_residual(engine, schur, N), tol);
  rep.add("connection identities", connection_residual(schur, f, p, N), tol);

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

RunReport verify_measure(const CircleMeasure& m, const SchurSequence& schur, std::size_t n,
                         double tol) {
  return verify_impl(m, &schur, n, tol);
}

RunReport verify_measure(const CircleMeasure& m, std::size_t n, double tol) {
  return verify_impl(m, nullptr, n, tol);
}

std::vector<cplx> synthesized_head(std::uint64_t seed, std::size_t len, double radius) {
  std::mt19937_64 rng(seed);
  auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<cplx> head(len);
  for (auto& a : head) {
    double r = radius * std::sqrt(uniform01());
    double t = two_pi * uniform01();
    a = {r * std::cos(t), r * std::sin(t)};
  }
  return head;
}

}  // namespace opucmat
