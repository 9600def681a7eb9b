#pragma once

#include <cstddef>
#include <vector>

#include "opucmat/mat2.hpp"

namespace opucmat {

// z^k for integer k, binary exponentiation; negative k inverts first.
cplx ipow(cplx z, int k);

// Dense real-coefficient polynomial, ascending powers; empty vector is the
// zero polynomial.
struct RealPoly {
  std::vector<double> c;

  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  int degree() const;  // -1 for the zero polynomial
  double coeff(int k) const;
  double eval(double x) const;
  cplx eval(cplx x) const;
  double leading() const;
};

RealPoly operator+(const RealPoly& a, const RealPoly& b);
RealPoly operator-(const RealPoly& a, const RealPoly& b);
RealPoly operator*(double s, const RealPoly& a);
RealPoly operator*(const RealPoly& a, const RealPoly& b);
// a * x^k
RealPoly shifted(const RealPoly& a, int k);

// Monic Chebyshev polynomials of the first and second kind on [-1,1]:
// 2^{1-n} T_n and 2^{-n} U_n for n >= 1, both equal to 1 at n = 0.
RealPoly cheb1_monic(std::size_t n);
RealPoly cheb2_monic(std::size_t n);

// 2x2 matrix with real-polynomial entries.
struct MatPoly2 {
  RealPoly p[2][2];

  RealPoly& operator()(int r, int c) { return p[r][c]; }
  const RealPoly& operator()(int r, int c) const { return p[r][c]; }

  static MatPoly2 constant(const Mat2& m);
  int degree() const;      // max entry degree, -1 if all zero
  Mat2 coeff(int k) const;  // matrix of x^k coefficients
  Mat2 eval(double x) const;
  CMat2 eval(cplx x) const;
};

MatPoly2 operator+(const MatPoly2& a, const MatPoly2& b);
MatPoly2 operator-(const MatPoly2& a, const MatPoly2& b);
MatPoly2 operator*(const Mat2& m, const MatPoly2& a);
MatPoly2 operator*(const MatPoly2& a, const Mat2& m);
MatPoly2 operator*(double s, const MatPoly2& a);
MatPoly2 operator*(const MatPoly2& a, const MatPoly2& b);
// a * x
MatPoly2 xshift(const MatPoly2& a);
double max_coeff(const MatPoly2& a);

// Dense complex-coefficient polynomial in z, ascending powers.
struct ComplexPoly {
  std::vector<cplx> c;

  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}
  static ComplexPoly one() { return ComplexPoly({cplx(1.0)}); }

  int degree() const;
  cplx coeff(int k) const;
  cplx eval(cplx z) const;
  cplx leading() const;
};

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(cplx s, const ComplexPoly& a);
// a * z^k, k >= 0
ComplexPoly shifted(const ComplexPoly& a, int k);

// Reversed polynomial z^n conj(p)(1/z); requires deg p <= n.
ComplexPoly reversed(const ComplexPoly& p, std::size_t n);

// Laurent polynomial sum_k c[k - min_power] z^k.
struct LaurentPoly {
  int min_power = 0;
  std::vector<cplx> c;

  LaurentPoly() = default;
  LaurentPoly(int minp, std::vector<cplx> coeffs) : min_power(minp), c(std::move(coeffs)) {}
  explicit LaurentPoly(const ComplexPoly& p) : min_power(0), c(p.c) {}

  int max_power() const { return min_power + static_cast<int>(c.size()) - 1; }
  cplx coeff(int k) const;
  // Requires z != 0 when negative powers are present.
  cplx eval(cplx z) const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(cplx s, const LaurentPoly& a);
// a * z^k
LaurentPoly shifted(const LaurentPoly& a, int k);
// conj(a)(1/z): coefficients conjugated and reflected k -> -k
LaurentPoly conj_reflect(const LaurentPoly& a);
// Largest |coefficient|.
double max_coeff(const LaurentPoly& a);
// Drop leading/trailing zero coefficients (exact zeros only).
LaurentPoly trimmed(const LaurentPoly& a);

// even(x) + y odd(x) restricted to the unit circle, with x = (z + 1/z)/2 and
// y = (z - 1/z)/(2i).
LaurentPoly laurent_from_xy(const RealPoly& even, const RealPoly& odd);

}  // namespace opucmat
