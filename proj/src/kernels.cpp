#include "opucmat/kernels.hpp"

#include <stdexcept>

#include "kernels_ops.hpp"

namespace opucmat::kern {

namespace {

double dot_scalar(const double* w, const double* v, std::size_t n) {
  KahanSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(w[i] * v[i]);
  return acc.s;
}

double dot3_scalar(const double* w, const double* a, const double* b, std::size_t n) {
  KahanSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(w[i] * a[i] * b[i]);
  return acc.s;
}

std::complex<double> dot_sesq_scalar(const double* w, const double* fre, const double* fim,
                                     const double* gre, const double* gim, std::size_t n) {
  KahanSum re, im;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(w[i] * (fre[i] * gre[i] + fim[i] * gim[i]));
    im.add(w[i] * (fim[i] * gre[i] - fre[i] * gim[i]));
  }
  return {re.s, im.s};
}

void horner_scalar(const std::complex<double>* c, std::size_t nc, const double* zre,
                   const double* zim, std::size_t n, double* outre, double* outim) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) outre[i] = outim[i] = 0.0;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double ar = c[nc - 1].real();
    double ai = c[nc - 1].imag();
    for (std::size_t j = nc - 1; j-- > 0;) {
      double nr = ar * zre[i] - ai * zim[i] + c[j].real();
      double ni = ar * zim[i] + ai * zre[i] + c[j].imag();
      ar = nr;
      ai = ni;
    }
    outre[i] = ar;
    outim[i] = ai;
  }
}

void horner_real_scalar(const double* c, std::size_t nc, const double* x, std::size_t n,
                        double* out) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double a = c[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) a = a * x[i] + c[j];
    out[i] = a;
  }
}

void cmul_scalar(double* are, double* aim, const double* bre, const double* bim,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double ar = are[i];
    double ai = aim[i];
    are[i] = ar * bre[i] - ai * bim[i];
    aim[i] = ar * bim[i] + ai * bre[i];
  }
}

const Ops* detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return &avx2_ops;
#endif
#if defined(__aarch64__)
  return &neon_ops;
#endif
  return &scalar_ops;
}

const Ops*& active() {
  static const Ops* ops = detect();
  return ops;
}

}  // namespace

const Ops scalar_ops = {"scalar",       dot_scalar,        dot3_scalar, dot_sesq_scalar,
                        horner_scalar, horner_real_scalar, cmul_scalar};

double dot(const double* w, const double* v, std::size_t n) { return active()->dot(w, v, n); }

double dot3(const double* w, const double* a, const double* b, std::size_t n) {
  return active()->dot3(w, a, b, n);
}

std::complex<double> dot_sesq(const double* w, const double* fre, const double* fim,
                              const double* gre, const double* gim, std::size_t n) {
  return active()->dot_sesq(w, fre, fim, gre, gim, n);
}

void horner(const std::complex<double>* c, std::size_t nc, const double* zre,
            const double* zim, std::size_t n, double* outre, double* outim) {
  active()->horner(c, nc, zre, zim, n, outre, outim);
}

void horner_real(const double* c, std::size_t nc, const double* x, std::size_t n,
                 double* out) {
  active()->horner_real(c, nc, x, n, out);
}

void cmul_inplace(double* are, double* aim, const double* bre, const double* bim,
                  std::size_t n) {
  active()->cmul(are, aim, bre, bim, n);
}

std::string backend() { return active()->name; }

void backend_force(const std::string& name) {
  if (name == "scalar") {
    active() = &scalar_ops;
    return;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && __builtin_cpu_supports("avx2")) {
    active() = &avx2_ops;
    return;
  }
#endif
#if defined(__aarch64__)
  if (name == "neon") {
    active() = &neon_ops;
    return;
  }
#endif
  throw std::invalid_argument("unknown or unsupported kernel backend: " + name);
}

void backend_auto() { active() = detect(); }

}  // namespace opucmat::kern
