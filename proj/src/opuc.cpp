#include "opucmat/opuc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "opucmat/kernels.hpp"

namespace opucmat {

SchurSequence::SchurSequence(std::vector<cplx> h, double e0) : head(std::move(h)), eps0(e0) {
  if (!(eps0 > 0.0) || !std::isfinite(eps0))
    throw std::invalid_argument("SchurSequence: eps0 must be positive");
  for (std::size_t n = 0; n < head.size(); ++n)
    if (!(std::abs(head[n]) < 1.0))
      throw std::invalid_argument("SchurSequence: |a_" + std::to_string(n + 1) + "| >= 1");
}

std::vector<ComplexPoly> szego_sequence(const SchurSequence& schur, std::size_t N) {
  std::vector<ComplexPoly> phi;
  phi.reserve(N + 1);
  phi.push_back(ComplexPoly::one());
  for (std::size_t n = 1; n <= N; ++n)
    phi.push_back(shifted(phi[n - 1], 1) + schur.a(n) * reversed(phi[n - 1], n - 1));
  return phi;
}

OpucSequences derived_sequences(const SchurSequence& schur, std::size_t N) {
  OpucSequences seq;
  seq.phi = szego_sequence(schur, N);
  seq.b.resize(N + 1);
  seq.eps.resize(N + 1);
  seq.kappa.resize(N + 1);
  seq.b[0] = 0.0;
  seq.eps[0] = schur.eps0;
  seq.kappa[0] = 1.0 / std::sqrt(schur.eps0);
  for (std::size_t n = 1; n <= N; ++n) {
    seq.b[n] = seq.b[n - 1] + schur.a(n) * std::conj(schur.a(n - 1));
    seq.eps[n] = seq.eps[n - 1] * (1.0 - std::norm(schur.a(n)));
    seq.kappa[n] = 1.0 / std::sqrt(seq.eps[n]);
  }
  return seq;
}

SchurSequence schur_from_measure(const CircleMeasure& m, std::size_t N, double tol) {
  ComplexPoly phi = ComplexPoly::one();
  std::vector<cplx> head;
  head.reserve(N);
  double eps0 = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    ComplexPoly star = reversed(phi, n);
    CircleEval phi_ev = eval_on_circle(LaurentPoly(phi), m);
    CircleEval star_ev = eval_on_circle(LaurentPoly(star), m);
    double eps_n = circle_inner(phi_ev, phi_ev, m).real();
    if (n == 0) eps0 = eps_n;
    if (!(eps_n > 0.0))
      throw std::domain_error("schur_from_measure: nonpositive norm at degree " +
                              std::to_string(n));
    CircleEval zphi_ev = eval_on_circle(shifted(LaurentPoly(phi), 1), m);
    cplx an = -circle_inner(zphi_ev, star_ev, m) / eps_n;
    if (std::abs(an) >= 1.0 - tol)
      throw std::domain_error("schur_from_measure: |a_" + std::to_string(n + 1) +
                              "| >= 1 - tol, measure supports fewer moments");
    head.push_back(an);
    phi = shifted(phi, 1) + an * star;
  }
  return SchurSequence(std::move(head), eps0);
}

CircleMeasure bernstein_szego_measure(const SchurSequence& schur, std::size_t nodes) {
  std::size_t m = schur.head.size();
  double eps_m = schur.eps0;
  for (const cplx& a : schur.head) eps_m *= 1.0 - std::norm(a);
  std::vector<cplx> coeffs = szego_sequence(schur, m).back().c;
  double scale = eps_m / two_pi;
  auto weight = [coeffs, scale](double theta) {
    cplx z(std::cos(theta), std::sin(theta));
    cplx v = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
    return scale / std::norm(v);
  };
  return CircleMeasure(weight, {}, nodes);
}

cplx MomentFunctional::moment(int j) const {
  std::size_t k = static_cast<std::size_t>(j < 0 ? -j : j);
  if (k >= c.size()) throw std::out_of_range("moment_functional: index beyond computed range");
  return j < 0 ? std::conj(c[k]) : c[k];
}

cplx MomentFunctional::sesquilinear(const LaurentPoly& f, const LaurentPoly& g) const {
  cplx s = 0.0;
  for (int j = f.min_power; j <= f.max_power(); ++j) {
    cplx fj = f.coeff(j);
    if (fj == 0.0) continue;
    for (int k = g.min_power; k <= g.max_power(); ++k) {
      cplx gk = g.coeff(k);
      if (gk != 0.0) s += fj * std::conj(gk) * moment(j - k);
    }
  }
  return s;
}

cplx MomentFunctional::bilinear(const LaurentPoly& f, const LaurentPoly& g) const {
  cplx s = 0.0;
  for (int j = f.min_power; j <= f.max_power(); ++j) {
    cplx fj = f.coeff(j);
    if (fj == 0.0) continue;
    for (int k = g.min_power; k <= g.max_power(); ++k) {
      cplx gk = g.coeff(k);
      if (gk != 0.0) s += fj * gk * moment(j + k);
    }
  }
  return s;
}

MomentFunctional moment_functional(const SchurSequence& schur, std::size_t K) {
  std::vector<ComplexPoly> phi = szego_sequence(schur, K);
  MomentFunctional mf;
  mf.c.resize(K + 1);
  mf.c[0] = schur.eps0;
  for (std::size_t n = 1; n <= K; ++n) {
    cplx s = 0.0;  // <phi_n, 1> = 0 pins c_n, phi_n being monic
    for (std::size_t k = 0; k < n; ++k) s += phi[n].coeff(static_cast<int>(k)) * mf.c[k];
    mf.c[n] = -s;
  }
  return mf;
}

}  // namespace opucmat
