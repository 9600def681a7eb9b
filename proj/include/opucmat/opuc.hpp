#pragma once

#include <cstddef>
#include <vector>

#include "opucmat/measures.hpp"
#include "opucmat/poly.hpp"

namespace opucmat {

// Schur parameter head a_1..a_m with |a_n| < 1; a_0 = 1 implicitly and
// a_n = 0 beyond the head. eps0 is the total mass of the underlying measure.
struct SchurSequence {
  std::vector<cplx> head;
  double eps0 = two_pi;

  SchurSequence() = default;
  explicit SchurSequence(std::vector<cplx> h, double e0 = two_pi);

  cplx a(std::size_t n) const {
    if (n == 0) return cplx(1.0);
    return n <= head.size() ? head[n - 1] : cplx(0.0);
  }
};

// Monic Szego polynomials phi_0..phi_N via
//   phi_n(z) = z phi_{n-1}(z) + a_n phi*_{n-1}(z),  phi_0 = 1.
std::vector<ComplexPoly> szego_sequence(const SchurSequence& schur, std::size_t N);

struct OpucSequences {
  std::vector<ComplexPoly> phi;
  std::vector<cplx> b;        // b_n = sum_{k<=n} a_k conj(a_{k-1}), b_0 = 0
  std::vector<double> eps;    // eps_n = eps0 prod_{k<=n} (1 - |a_k|^2)
  std::vector<double> kappa;  // eps_n^{-1/2}
};

OpucSequences derived_sequences(const SchurSequence& schur, std::size_t N);

// Recovers a_1..a_N by quadrature orthogonalization:
//   a_{n+1} = -<z phi_n, phi*_n> / eps_n,
// with eps_n = <phi_n, phi_n> recomputed each step. Throws std::domain_error
// when |a_{n+1}| >= 1 - tol (measure has fewer than N+1 effective moments) or
// when eps_n <= 0 (not a positive measure), naming the offending index.
SchurSequence schur_from_measure(const CircleMeasure& m, std::size_t N, double tol = 1e-10);

// Measure with weight eps_m / (2pi |phi_m(e^{i theta})|^2), m = head length.
// Its Schur parameters are exactly a_1..a_m followed by zeros, and its total
// mass is eps0.
CircleMeasure bernstein_szego_measure(const SchurSequence& schur,
                                      std::size_t nodes = default_nodes);

// Exact moments c_j = int z^j dmu, j = 0..K, of the Bernstein-Szego measure
// of a head, solved from the triangular conditions <phi_j, 1> = 0 with
// c_0 = eps0; c_{-j} = conj(c_j). Inner products evaluated through these
// finite sums stay accurate where grid quadrature loses to the weight spikes
// of heads with near-circle zeros.
struct MomentFunctional {
  std::vector<cplx> c;

  cplx moment(int j) const;  // throws std::out_of_range beyond |j| < c.size()
  cplx sesquilinear(const LaurentPoly& f, const LaurentPoly& g) const;  // int f conj(g) dmu
  cplx bilinear(const LaurentPoly& f, const LaurentPoly& g) const;      // int f g dmu
};

MomentFunctional moment_functional(const SchurSequence& schur, std::size_t K);

}  // namespace opucmat
