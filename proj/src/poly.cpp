#include "opucmat/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace opucmat {

cplx ipow(cplx z, int k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  cplx r = 1.0;
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

int RealPoly::degree() const {
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0.0) return static_cast<int>(i);
  return -1;
}

double RealPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return 0.0;
  return c[static_cast<std::size_t>(k)];
}

double RealPoly::eval(double x) const {
  double r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

cplx RealPoly::eval(cplx x) const {
  cplx r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

double RealPoly::leading() const {
  int d = degree();
  return d < 0 ? 0.0 : c[static_cast<std::size_t>(d)];
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  RealPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
  RealPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

RealPoly operator*(double s, const RealPoly& a) {
  RealPoly r = a;
  for (double& x : r.c) x *= s;
  return r;
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  RealPoly r;
  r.c.resize(a.c.size() + b.c.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  return r;
}

RealPoly shifted(const RealPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("RealPoly shift: negative power");
  RealPoly r;
  r.c.resize(a.c.size() + static_cast<std::size_t>(k), 0.0);
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
  return r;
}

// That_0 = 1, That_1 = x, That_2 = x That_1 - (1/2) That_0,
// That_{n+1} = x That_n - (1/4) That_{n-1} for n >= 2.
RealPoly cheb1_monic(std::size_t n) {
  RealPoly prev({1.0});
  if (n == 0) return prev;
  RealPoly cur({0.0, 1.0});
  for (std::size_t m = 1; m < n; ++m) {
    double coef = (m == 1) ? 0.5 : 0.25;
    RealPoly next = shifted(cur, 1) - coef * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Uhat_0 = 1, Uhat_1 = x, Uhat_{n+1} = x Uhat_n - (1/4) Uhat_{n-1} for n >= 1.
RealPoly cheb2_monic(std::size_t n) {
  RealPoly prev({1.0});
  if (n == 0) return prev;
  RealPoly cur({0.0, 1.0});
  for (std::size_t m = 1; m < n; ++m) {
    RealPoly next = shifted(cur, 1) - 0.25 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MatPoly2 MatPoly2::constant(const Mat2& m) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j) != 0.0) r(i, j).c = {m(i, j)};
  return r;
}

int MatPoly2::degree() const {
  int d = -1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, p[i][j].degree());
  return d;
}

Mat2 MatPoly2::coeff(int k) const {
  return {p[0][0].coeff(k), p[0][1].coeff(k), p[1][0].coeff(k), p[1][1].coeff(k)};
}

Mat2 MatPoly2::eval(double x) const {
  return {p[0][0].eval(x), p[0][1].eval(x), p[1][0].eval(x), p[1][1].eval(x)};
}

CMat2 MatPoly2::eval(cplx x) const {
  return {p[0][0].eval(x), p[0][1].eval(x), p[1][0].eval(x), p[1][1].eval(x)};
}

MatPoly2 operator+(const MatPoly2& a, const MatPoly2& b) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

MatPoly2 operator-(const MatPoly2& a, const MatPoly2& b) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

MatPoly2 operator*(const Mat2& m, const MatPoly2& a) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, 0) * a(0, j) + m(i, 1) * a(1, j);
  return r;
}

MatPoly2 operator*(const MatPoly2& a, const Mat2& m) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(0, j) * a(i, 0) + m(1, j) * a(i, 1);
  return r;
}

MatPoly2 operator*(double s, const MatPoly2& a) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = s * a(i, j);
  return r;
}

MatPoly2 operator*(const MatPoly2& a, const MatPoly2& b) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

MatPoly2 xshift(const MatPoly2& a) {
  MatPoly2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = shifted(a(i, j), 1);
  return r;
}

double max_coeff(const MatPoly2& a) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (double x : a(i, j).c) m = std::max(m, std::abs(x));
  return m;
}

int ComplexPoly::degree() const {
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0.0) return static_cast<int>(i);
  return -1;
}

cplx ComplexPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c.size())) return {};
  return c[static_cast<std::size_t>(k)];
}

cplx ComplexPoly::eval(cplx z) const {
  cplx r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
  return r;
}

cplx ComplexPoly::leading() const {
  int d = degree();
  return d < 0 ? cplx{} : c[static_cast<std::size_t>(d)];
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

ComplexPoly operator*(cplx s, const ComplexPoly& a) {
  ComplexPoly r = a;
  for (cplx& x : r.c) x *= s;
  return r;
}

ComplexPoly shifted(const ComplexPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("ComplexPoly shift: negative power");
  ComplexPoly r;
  r.c.resize(a.c.size() + static_cast<std::size_t>(k));
  std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
  return r;
}

ComplexPoly reversed(const ComplexPoly& p, std::size_t n) {
  if (p.degree() > static_cast<int>(n))
    throw std::invalid_argument("reversed: polynomial degree exceeds n");
  ComplexPoly r;
  r.c.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) r.c[k] = std::conj(p.coeff(static_cast<int>(n - k)));
  return r;
}

cplx LaurentPoly::coeff(int k) const {
  int idx = k - min_power;
  if (idx < 0 || idx >= static_cast<int>(c.size())) return {};
  return c[static_cast<std::size_t>(idx)];
}

cplx LaurentPoly::eval(cplx z) const {
  if (c.empty()) return {};
  if (min_power < 0 && z == 0.0)
    throw std::domain_error("LaurentPoly: evaluation at z = 0 with negative powers");
  cplx r = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
  return r * ipow(z, min_power);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c.empty()) return b;
  if (b.c.empty()) return a;
  LaurentPoly r;
  r.min_power = std::min(a.min_power, b.min_power);
  int hi = std::max(a.max_power(), b.max_power());
  r.c.resize(static_cast<std::size_t>(hi - r.min_power + 1));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    r.c[static_cast<std::size_t>(a.min_power - r.min_power) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i)
    r.c[static_cast<std::size_t>(b.min_power - r.min_power) + i] += b.c[i];
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + cplx(-1.0) * b;
}

LaurentPoly operator*(cplx s, const LaurentPoly& a) {
  LaurentPoly r = a;
  for (cplx& x : r.c) x *= s;
  return r;
}

LaurentPoly shifted(const LaurentPoly& a, int k) {
  LaurentPoly r = a;
  r.min_power += k;
  return r;
}

LaurentPoly conj_reflect(const LaurentPoly& a) {
  LaurentPoly r;
  r.min_power = -a.max_power();
  r.c.resize(a.c.size());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = std::conj(a.c[a.c.size() - 1 - i]);
  return r;
}

double max_coeff(const LaurentPoly& a) {
  double m = 0.0;
  for (const cplx& x : a.c) m = std::max(m, std::abs(x));
  return m;
}

LaurentPoly trimmed(const LaurentPoly& a) {
  std::size_t lo = 0;
  std::size_t hi = a.c.size();
  while (lo < hi && a.c[lo] == 0.0) ++lo;
  while (hi > lo && a.c[hi - 1] == 0.0) --hi;
  LaurentPoly r;
  if (lo == hi) return r;
  r.min_power = a.min_power + static_cast<int>(lo);
  r.c.assign(a.c.begin() + static_cast<long>(lo), a.c.begin() + static_cast<long>(hi));
  return r;
}

namespace {

// (z + 1/z)/2 * f
LaurentPoly half_sum_product(const LaurentPoly& f) {
  LaurentPoly g;
  g.min_power = f.min_power - 1;
  g.c.assign(f.c.size() + 2, cplx{});
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    g.c[i] += 0.5 * f.c[i];
    g.c[i + 2] += 0.5 * f.c[i];
  }
  return g;
}

LaurentPoly laurent_in_x(const RealPoly& p) {
  LaurentPoly acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = half_sum_product(acc);
    acc = acc + LaurentPoly(0, {cplx(p.coeff(k))});
  }
  return acc;
}

}  // namespace

LaurentPoly laurent_from_xy(const RealPoly& even, const RealPoly& odd) {
  LaurentPoly o = laurent_in_x(odd);
  // (z - 1/z)/(2i) * o
  LaurentPoly yo;
  yo.min_power = o.min_power - 1;
  yo.c.assign(o.c.size() + 2, cplx{});
  const cplx half_i(0.0, 0.5);
  for (std::size_t i = 0; i < o.c.size(); ++i) {
    yo.c[i] += half_i * o.c[i];
    yo.c[i + 2] -= half_i * o.c[i];
  }
  return trimmed(laurent_in_x(even) + yo);
}

}  // namespace opucmat
