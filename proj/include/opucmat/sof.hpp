#pragma once

#include <utility>
#include <vector>

#include "opucmat/mat2.hpp"
#include "opucmat/measures.hpp"
#include "opucmat/opuc.hpp"
#include "opucmat/poly.hpp"

namespace opucmat {

// Vector semi-orthogonal function of index n with Laurent components
// spanning powers -n..n; real on the unit circle.
struct Vsof {
  std::size_t n = 0;
  LaurentPoly f1, f2;
};

// H(a) = [[Re a, Im a], [Im a, -Re a]]; symmetric, trace 0, H(a)^2 = |a|^2 I.
Mat2 schur_matrix(cplx a);

// Components built from a monic polynomial of degree 2n-1:
//   f1 = (z phi + phi*) / (2^n z^n),  f2 = (z phi - phi*) / (i 2^n z^n).
// Throws std::invalid_argument unless deg phi = 2n-1 and phi is monic.
std::pair<LaurentPoly, LaurentPoly> semi_orthogonal_pair(const ComplexPoly& phi,
                                                         std::size_t n);

// Splits f = p1(x) + y p2(x) with x = (z + 1/z)/2, y = (z - 1/z)/(2i), valid
// when the coefficients satisfy c_{-k} = conj(c_k); the split uses
//   z^k + z^{-k} = 2^k That_k(x),  z^k - z^{-k} = i y 2^k Uhat_{k-1}(x),
// and stays in coefficient space, so x = +-1 needs no special casing.
// Throws std::invalid_argument when the symmetry fails beyond 1e-10 * scale.
std::pair<RealPoly, RealPoly> xy_decompose(const LaurentPoly& f);

// f_n for the given head; n = 0 is the constant pair (1, 0).
Vsof vsof(const SchurSequence& schur, std::size_t n);
// f_0..f_N sharing one Szego recurrence pass.
std::vector<Vsof> vsof_sequence(const SchurSequence& schur, std::size_t N);

// <<f, g>>(i,j) = <f_i, g_j> entrywise over the circle measure.
CMat2 vsof_inner(const Vsof& f, const Vsof& g, const CircleMeasure& m);
CMat2 vsof_inner(const Vsof& f, const Vsof& g, const MomentFunctional& mf);

// Gram block: C_0 = eps0 C; C_n = (eps_{2n-1} / 2^{2n-1}) (I - H(a_{2n})).
Mat2 gram_block(const SchurSequence& schur, std::size_t n);

struct VsofRecurrence {
  CMat2 L;  // coefficient of f_n
  CMat2 M;  // coefficient of f_{n-1}
};

// Coefficients of z f_n = (I + iJ) f_{n+1} + L_n f_n + M_n f_{n-1} for n >= 1:
//   L_n = (1/2) [ (I - H_{2n}) H_{2n-1} (I + iJ) - (I + iJ) H_{2n+1} (I + H_{2n}) ]
//   M_n = (1/4) (1 - |a_{2n-1}|^2) (I - H_{2n}) (I - iJ) (I + H_{2n-2})
// with H_m = H(a_m) and H_0 = 2C - I.
VsofRecurrence vsof_recurrence_coeffs(const SchurSequence& schur, std::size_t n);

}  // namespace opucmat
