#include "opucmat/sof.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opucmat {

Mat2 schur_matrix(cplx a) {
  return {a.real(), a.imag(), a.imag(), -a.real()};
}

std::pair<LaurentPoly, LaurentPoly> semi_orthogonal_pair(const ComplexPoly& phi,
                                                         std::size_t n) {
  if (n == 0) throw std::invalid_argument("semi_orthogonal_pair: n must be >= 1");
  int deg = static_cast<int>(2 * n) - 1;
  if (phi.degree() != deg)
    throw std::invalid_argument("semi_orthogonal_pair: need degree " + std::to_string(deg) +
                                ", got " + std::to_string(phi.degree()));
  if (std::abs(phi.leading() - cplx(1.0)) > 1e-12)
    throw std::invalid_argument("semi_orthogonal_pair: polynomial is not monic");
  LaurentPoly zphi = shifted(LaurentPoly(phi), 1);
  LaurentPoly star{reversed(phi, static_cast<std::size_t>(deg))};
  double inv2n = std::ldexp(1.0, -static_cast<int>(n));  // 2^{-n}, exact
  int shift = -static_cast<int>(n);
  LaurentPoly f1 = shifted(cplx(inv2n) * (zphi + star), shift);
  LaurentPoly f2 = shifted(cplx(0.0, -inv2n) * (zphi - star), shift);
  return {f1, f2};
}

std::pair<RealPoly, RealPoly> xy_decompose(const LaurentPoly& f) {
  int K = std::max(-f.min_power, f.max_power());
  double scale = max_coeff(f);
  if (scale == 0.0) return {RealPoly{}, RealPoly{}};
  for (int k = 0; k <= K; ++k)
    if (std::abs(f.coeff(-k) - std::conj(f.coeff(k))) > 1e-10 * scale)
      throw std::invalid_argument(
          "xy_decompose: coefficients are not reflection-symmetric at power " +
          std::to_string(k));

  RealPoly p1({f.coeff(0).real()});
  RealPoly p2;
  // Running monic Chebyshev values at index k: t_cur = That_k, u_low = Uhat_{k-1}.
  RealPoly t_prev({1.0}), t_cur({0.0, 1.0});
  RealPoly u_low({1.0}), u_high({0.0, 1.0});
  double pow2 = 1.0;
  for (int k = 1; k <= K; ++k) {
    pow2 *= 2.0;
    cplx ck = 0.5 * (f.coeff(k) + std::conj(f.coeff(-k)));
    if (ck.real() != 0.0) p1 = p1 + (pow2 * ck.real()) * t_cur;
    if (ck.imag() != 0.0) p2 = p2 + (-pow2 * ck.imag()) * u_low;
    RealPoly t_next = shifted(t_cur, 1) - (k == 1 ? 0.5 : 0.25) * t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
    RealPoly u_next = shifted(u_high, 1) - 0.25 * u_low;
    u_low = std::move(u_high);
    u_high = std::move(u_next);
  }
  return {p1, p2};
}

Vsof vsof(const SchurSequence& schur, std::size_t n) {
  Vsof v;
  v.n = n;
  if (n == 0) {
    v.f1 = LaurentPoly(0, {cplx(1.0)});
    return v;
  }
  ComplexPoly phi = szego_sequence(schur, 2 * n - 1).back();
  auto [f1, f2] = semi_orthogonal_pair(phi, n);
  v.f1 = std::move(f1);
  v.f2 = std::move(f2);
  return v;
}

std::vector<Vsof> vsof_sequence(const SchurSequence& schur, std::size_t N) {
  std::vector<Vsof> out;
  out.reserve(N + 1);
  out.push_back(vsof(schur, 0));
  if (N == 0) return out;
  auto phi = szego_sequence(schur, 2 * N - 1);
  for (std::size_t n = 1; n <= N; ++n) {
    Vsof v;
    v.n = n;
    auto [f1, f2] = semi_orthogonal_pair(phi[2 * n - 1], n);
    v.f1 = std::move(f1);
    v.f2 = std::move(f2);
    out.push_back(std::move(v));
  }
  return out;
}

CMat2 vsof_inner(const Vsof& f, const Vsof& g, const CircleMeasure& m) {
  return vector_inner(f.f1, f.f2, g.f1, g.f2, m);
}

CMat2 vsof_inner(const Vsof& f, const Vsof& g, const MomentFunctional& mf) {
  return {mf.sesquilinear(f.f1, g.f1), mf.sesquilinear(f.f1, g.f2),
          mf.sesquilinear(f.f2, g.f1), mf.sesquilinear(f.f2, g.f2)};
}

Mat2 gram_block(const SchurSequence& schur, std::size_t n) {
  if (n == 0) return schur.eps0 * C2;
  double eps = schur.eps0;
  for (std::size_t k = 1; k <= 2 * n - 1; ++k) eps *= 1.0 - std::norm(schur.a(k));
  double factor = eps * std::ldexp(1.0, 1 - 2 * static_cast<int>(n));
  return factor * (I2 - schur_matrix(schur.a(2 * n)));
}

VsofRecurrence vsof_recurrence_coeffs(const SchurSequence& schur, std::size_t n) {
  if (n == 0) throw std::invalid_argument("vsof_recurrence_coeffs: n must be >= 1");
  const cplx i(0.0, 1.0);
  CMat2 IpiJ = CMat2(I2) + i * CMat2(J2);
  CMat2 ImiJ = CMat2(I2) - i * CMat2(J2);
  Mat2 H2n = schur_matrix(schur.a(2 * n));
  Mat2 H2nm1 = schur_matrix(schur.a(2 * n - 1));
  Mat2 H2np1 = schur_matrix(schur.a(2 * n + 1));
  Mat2 H2nm2 = schur_matrix(schur.a(2 * n - 2));
  VsofRecurrence r;
  r.L = 0.5 * (CMat2(I2 - H2n) * CMat2(H2nm1) * IpiJ - IpiJ * CMat2(H2np1) * CMat2(I2 + H2n));
  r.M = 0.25 * (1.0 - std::norm(schur.a(2 * n - 1))) *
        (CMat2(I2 - H2n) * ImiJ * CMat2(I2 + H2nm2));
  return r;
}

}  // namespace opucmat
