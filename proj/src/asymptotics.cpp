#include "opucmat/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "kernels_ops.hpp"

namespace opucmat {

cplx szego_function(const CircleMeasure& m, cplx z) {
  if (!m.atoms.empty())
    throw std::domain_error("szego_function: measure has point masses");
  if (std::abs(std::abs(z) - 1.0) < 1e-8)
    throw std::domain_error("szego_function: z too close to the unit circle");
  std::size_t N = m.nodes();
  double h = two_pi / static_cast<double>(N);
  kern::KahanSum re, im;
  for (std::size_t k = 0; k < N; ++k) {
    double w = m.qw[k] / h;
    if (!(w > 1e-14))
      throw std::domain_error("szego_function: weight not strictly positive at node " +
                              std::to_string(k));
    cplx zk(m.zre[k], m.zim[k]);
    cplx a = std::log(w) * (zk + z) / (zk - z);
    re.add(a.real());
    im.add(a.imag());
  }
  return std::exp(cplx(re.s, im.s) * (h / (2.0 * two_pi)));
}

cplx joukowski_inverse(cplx x) {
  double off = std::max(std::abs(x.real()) - 1.0, 0.0);
  if (std::hypot(off, x.imag()) < 1e-12)
    throw std::domain_error("joukowski_inverse: x too close to [-1, 1]");
  cplx s = std::sqrt(x * x - 1.0);
  cplx big = std::abs(x + s) >= std::abs(x - s) ? x + s : x - s;
  return 1.0 / big;
}

double SzegoData::R(double z) const {
  kern::KahanSum acc;
  for (std::size_t k = 0; k < x.size(); ++k)
    acc.add(logdet[k] / (1.0 - 2.0 * x[k] * z + z * z));
  return (1.0 - z * z) * h / (4.0 * two_pi) * acc.s;
}

double SzegoData::I(double z) const {
  kern::KahanSum acc;
  for (std::size_t k = 0; k < x.size(); ++k)
    acc.add(ratio_s[k] / (1.0 - 2.0 * x[k] * z + z * z));
  return -z * h / (2.0 * two_pi) * acc.s;
}

SzegoData interval_szego_data(const MatrixMeasure& om) {
  if (!om.atoms.empty())
    throw std::domain_error("interval_szego_data: measure has point masses");
  std::size_t N = om.nodes();
  SzegoData d;
  d.x = om.x;
  d.h = two_pi / static_cast<double>(N);
  d.logdet.resize(N);
  d.ratio_s.resize(N);
  kern::KahanSum acc;
  for (std::size_t k = 0; k < N; ++k) {
    double a = om.s[k] * om.rho_g[k];
    double b = om.s[k] * om.sigma_g[k];
    if (!(a + b > 1e-14) || !(a - b > 1e-14))
      throw std::domain_error(
          "interval_szego_data: weight not strictly positive at node " +
          std::to_string(k));
    d.logdet[k] = std::log(0.25 * (a + b) * (a - b));
    d.ratio_s[k] = std::log((a + b) / (a - b)) * om.s[k];
    acc.add(d.ratio_s[k]);
  }
  d.gamma = -d.h / (4.0 * two_pi) * acc.s;
  return d;
}

Mat2 matrix_szego(const SzegoData& d, double x) {
  double z = joukowski_inverse(cplx(x, 0.0)).real();
  double r = d.R(z);
  double i = d.I(z);
  double g = d.gamma;
  Mat2 rot(std::cos(i), std::sin(i), -std::sin(i), std::cos(i));
  Mat2 tail(3.0, -2.0 * g, 2.0 * g * z, 3.0 * z);
  double pref = std::exp(r) / std::sqrt(9.0 + 4.0 * g * g);
  return pref * (Mat2::diag(1.0, x - z) * (rot * tail));
}

Mat2 orthonormal_limit(const CircleMeasure& m, double x) {
  SzegoData d = interval_szego_data(associated_matrix_measure(m));
  return (1.0 / std::sqrt(two_pi)) * inverse(matrix_szego(d, x));
}

std::vector<ConvergenceRow> convergence_report(const CircleMeasure& m,
                                               const SchurSequence& schur,
                                               double x, std::size_t N) {
  Mat2 limit = orthonormal_limit(m, x);
  std::vector<OrthonormalPoly> q = orthonormal_matrix_polys(schur, N);
  double z = joukowski_inverse(cplx(x, 0.0)).real();

  std::vector<double> err(N + 1);
  double zp = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    err[n] = max_abs(zp * q[n].poly.eval(x) - limit);
    zp *= z;
  }
  std::vector<ConvergenceRow> rows(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    rows[n].n = n;
    rows[n].err = err[n];
    rows[n].rate = n < N && err[n] > 0.0 ? err[n + 1] / err[n]
                                         : std::numeric_limits<double>::quiet_NaN();
  }
  return rows;
}

std::vector<double> vsof_limit_errors(const CircleMeasure& m,
                                      const SchurSequence& schur, cplx z,
                                      std::size_t N) {
  bool inside = std::abs(z) < 1.0;
  cplx d0 = szego_function(m, cplx(0.0));
  cplx dz = szego_function(m, z);
  cplx t1 = inside ? d0 / dz : d0 * dz;
  cplx t2 = (inside ? cplx(0.0, 1.0) : cplx(0.0, -1.0)) * t1;

  std::vector<Vsof> f = vsof_sequence(schur, N);
  std::vector<double> err(N + 1);
  double p2 = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    int k = inside ? static_cast<int>(n) : -static_cast<int>(n);
    cplx v1 = p2 * shifted(f[n].f1, k).eval(z);
    cplx v2 = p2 * shifted(f[n].f2, k).eval(z);
    err[n] = std::max(std::abs(v1 - t1), std::abs(v2 - t2));
    p2 *= 2.0;
  }
  return err;
}

double gamma_limit(const SchurSequence& schur) {
  cplx b = 0.0;
  for (std::size_t k = 1; k <= schur.head.size(); ++k)
    b += schur.a(k) * std::conj(schur.a(k - 1));
  return 0.5 * b.imag();
}

}  // namespace opucmat
