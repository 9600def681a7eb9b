// AVX2 variants of the grid kernels. This file is compiled with -mavx2 on
// x86-64 only; callers go through the runtime dispatch in kernels.cpp.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_ops.hpp"

namespace opucmat::kern {

namespace {

// Folds four per-lane Kahan states and a scalar tail into one sum. Each lane
// carries (sum, pending compensation); the compensation is subtracted on fold.
double fold(__m256d s, __m256d c, KahanSum acc) {
  alignas(32) double sl[4];
  alignas(32) double cl[4];
  _mm256_store_pd(sl, s);
  _mm256_store_pd(cl, c);
  for (int k = 0; k < 4; ++k) {
    acc.add(sl[k]);
    acc.add(-cl[k]);
  }
  return acc.s;
}

double dot_avx2(const double* w, const double* v, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d term = _mm256_sub_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(v + i)), c);
    __m256d t = _mm256_add_pd(s, term);
    c = _mm256_sub_pd(_mm256_sub_pd(t, s), term);
    s = t;
  }
  KahanSum tail;
  for (; i < n; ++i) tail.add(w[i] * v[i]);
  return fold(s, c, tail);
}

double dot3_avx2(const double* w, const double* a, const double* b, std::size_t n) {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d p = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(a + i)),
                              _mm256_loadu_pd(b + i));
    __m256d term = _mm256_sub_pd(p, c);
    __m256d t = _mm256_add_pd(s, term);
    c = _mm256_sub_pd(_mm256_sub_pd(t, s), term);
    s = t;
  }
  KahanSum tail;
  for (; i < n; ++i) tail.add(w[i] * a[i] * b[i]);
  return fold(s, c, tail);
}

std::complex<double> dot_sesq_avx2(const double* w, const double* fre, const double* fim,
                                   const double* gre, const double* gim, std::size_t n) {
  __m256d sre = _mm256_setzero_pd();
  __m256d cre = _mm256_setzero_pd();
  __m256d sim = _mm256_setzero_pd();
  __m256d cim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d wv = _mm256_loadu_pd(w + i);
    __m256d fr = _mm256_loadu_pd(fre + i);
    __m256d fi = _mm256_loadu_pd(fim + i);
    __m256d gr = _mm256_loadu_pd(gre + i);
    __m256d gi = _mm256_loadu_pd(gim + i);
    __m256d pre = _mm256_mul_pd(wv, _mm256_add_pd(_mm256_mul_pd(fr, gr), _mm256_mul_pd(fi, gi)));
    __m256d pim = _mm256_mul_pd(wv, _mm256_sub_pd(_mm256_mul_pd(fi, gr), _mm256_mul_pd(fr, gi)));
    __m256d tre = _mm256_sub_pd(pre, cre);
    __m256d t1 = _mm256_add_pd(sre, tre);
    cre = _mm256_sub_pd(_mm256_sub_pd(t1, sre), tre);
    sre = t1;
    __m256d tim = _mm256_sub_pd(pim, cim);
    __m256d t2 = _mm256_add_pd(sim, tim);
    cim = _mm256_sub_pd(_mm256_sub_pd(t2, sim), tim);
    sim = t2;
  }
  KahanSum tre, tim;
  for (; i < n; ++i) {
    tre.add(w[i] * (fre[i] * gre[i] + fim[i] * gim[i]));
    tim.add(w[i] * (fim[i] * gre[i] - fre[i] * gim[i]));
  }
  return {fold(sre, cre, tre), fold(sim, cim, tim)};
}

void horner_avx2(const std::complex<double>* c, std::size_t nc, const double* zre,
                 const double* zim, std::size_t n, double* outre, double* outim) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) outre[i] = outim[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d zr = _mm256_loadu_pd(zre + i);
    __m256d zi = _mm256_loadu_pd(zim + i);
    __m256d ar = _mm256_set1_pd(c[nc - 1].real());
    __m256d ai = _mm256_set1_pd(c[nc - 1].imag());
    for (std::size_t j = nc - 1; j-- > 0;) {
      __m256d nr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ar, zr), _mm256_mul_pd(ai, zi)),
                                 _mm256_set1_pd(c[j].real()));
      __m256d ni = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, zi), _mm256_mul_pd(ai, zr)),
                                 _mm256_set1_pd(c[j].imag()));
      ar = nr;
      ai = ni;
    }
    _mm256_storeu_pd(outre + i, ar);
    _mm256_storeu_pd(outim + i, ai);
  }
  for (; i < n; ++i) {
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

void horner_real_avx2(const double* c, std::size_t nc, const double* x, std::size_t n,
                      double* out) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d a = _mm256_set1_pd(c[nc - 1]);
    for (std::size_t j = nc - 1; j-- > 0;)
      a = _mm256_add_pd(_mm256_mul_pd(a, xv), _mm256_set1_pd(c[j]));
    _mm256_storeu_pd(out + i, a);
  }
  for (; i < n; ++i) {
    double a = c[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) a = a * x[i] + c[j];
    out[i] = a;
  }
}

void cmul_avx2(double* are, double* aim, const double* bre, const double* bim, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ar = _mm256_loadu_pd(are + i);
    __m256d ai = _mm256_loadu_pd(aim + i);
    __m256d br = _mm256_loadu_pd(bre + i);
    __m256d bi = _mm256_loadu_pd(bim + i);
    _mm256_storeu_pd(are + i, _mm256_sub_pd(_mm256_mul_pd(ar, br), _mm256_mul_pd(ai, bi)));
    _mm256_storeu_pd(aim + i, _mm256_add_pd(_mm256_mul_pd(ar, bi), _mm256_mul_pd(ai, br)));
  }
  for (; i < n; ++i) {
    double ar = are[i];
    double ai = aim[i];
    are[i] = ar * bre[i] - ai * bim[i];
    aim[i] = ar * bim[i] + ai * bre[i];
  }
}

}  // namespace

const Ops avx2_ops = {"avx2",      dot_avx2,         dot3_avx2, dot_sesq_avx2,
                      horner_avx2, horner_real_avx2, cmul_avx2};

}  // namespace opucmat::kern

#endif  // x86-64
