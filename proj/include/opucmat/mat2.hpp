#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace opucmat {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double two_pi = 2.0 * pi;

// 2x2 real matrix, row-major.
struct Mat2 {
  double v[2][2];

  Mat2() : v{{0.0, 0.0}, {0.0, 0.0}} {}
  Mat2(double a11, double a12, double a21, double a22) : v{{a11, a12}, {a21, a22}} {}

  double& operator()(int r, int c) { return v[r][c]; }
  double operator()(int r, int c) const { return v[r][c]; }

  static Mat2 diag(double a, double b) { return {a, 0.0, 0.0, b}; }
};

// 2x2 complex matrix, row-major. Implicitly lifts from Mat2 so real and
// complex factors mix in formulas.
struct CMat2 {
  cplx v[2][2];

  CMat2() : v{{0.0, 0.0}, {0.0, 0.0}} {}
  CMat2(cplx a11, cplx a12, cplx a21, cplx a22) : v{{a11, a12}, {a21, a22}} {}
  CMat2(const Mat2& m) : v{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}} {}

  cplx& operator()(int r, int c) { return v[r][c]; }
  cplx operator()(int r, int c) const { return v[r][c]; }

  static CMat2 diag(cplx a, cplx b) { return {a, cplx{}, cplx{}, b}; }
};

inline const Mat2 I2{1.0, 0.0, 0.0, 1.0};
inline const Mat2 C2{1.0, 0.0, 0.0, 0.0};
inline const Mat2 J2{0.0, 1.0, -1.0, 0.0};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}
inline Mat2 operator-(const Mat2& a) { return {-a(0, 0), -a(0, 1), -a(1, 0), -a(1, 1)}; }
inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}
inline Mat2 operator*(double s, const Mat2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}
inline Mat2 operator*(const Mat2& a, double s) { return s * a; }

inline Mat2 transpose(const Mat2& a) { return {a(0, 0), a(1, 0), a(0, 1), a(1, 1)}; }
inline double trace(const Mat2& a) { return a(0, 0) + a(1, 1); }
inline double det(const Mat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }
inline Mat2 adjugate(const Mat2& a) { return {a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)}; }
inline Mat2 inverse(const Mat2& a) {
  double d = det(a);
  if (d == 0.0) throw std::domain_error("Mat2: singular matrix");
  return (1.0 / d) * adjugate(a);
}
inline double max_abs(const Mat2& a) {
  return std::max(std::max(std::abs(a(0, 0)), std::abs(a(0, 1))),
                  std::max(std::abs(a(1, 0)), std::abs(a(1, 1))));
}

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}
inline CMat2 operator-(const CMat2& a, const CMat2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}
inline CMat2 operator-(const CMat2& a) { return {-a(0, 0), -a(0, 1), -a(1, 0), -a(1, 1)}; }
inline CMat2 operator*(const CMat2& a, const CMat2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}
inline CMat2 operator*(cplx s, const CMat2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}
inline CMat2 operator*(const CMat2& a, cplx s) { return s * a; }
inline CMat2 operator*(double s, const CMat2& a) { return cplx(s) * a; }

inline CMat2 transpose(const CMat2& a) { return {a(0, 0), a(1, 0), a(0, 1), a(1, 1)}; }
inline cplx trace(const CMat2& a) { return a(0, 0) + a(1, 1); }
inline cplx det(const CMat2& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }
inline CMat2 adjugate(const CMat2& a) { return {a(1, 1), -a(0, 1), -a(1, 0), a(0, 0)}; }
inline CMat2 conj(const CMat2& a) {
  return {std::conj(a(0, 0)), std::conj(a(0, 1)), std::conj(a(1, 0)), std::conj(a(1, 1))};
}
inline CMat2 adjoint(const CMat2& a) { return conj(transpose(a)); }
inline Mat2 real(const CMat2& a) {
  return {a(0, 0).real(), a(0, 1).real(), a(1, 0).real(), a(1, 1).real()};
}
inline Mat2 imag(const CMat2& a) {
  return {a(0, 0).imag(), a(0, 1).imag(), a(1, 0).imag(), a(1, 1).imag()};
}
inline double max_abs(const CMat2& a) {
  return std::max(std::max(std::abs(a(0, 0)), std::abs(a(0, 1))),
                  std::max(std::abs(a(1, 0)), std::abs(a(1, 1))));
}

}  // namespace opucmat
