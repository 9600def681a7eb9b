// NEON variants of the grid kernels, aarch64 only. NEON is architecturally
// mandatory there, so no runtime feature probe is needed beyond the target.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "kernels_ops.hpp"

namespace opucmat::kern {

namespace {

double fold(float64x2_t s, float64x2_t c, KahanSum acc) {
  acc.add(vgetq_lane_f64(s, 0));
  acc.add(-vgetq_lane_f64(c, 0));
  acc.add(vgetq_lane_f64(s, 1));
  acc.add(-vgetq_lane_f64(c, 1));
  return acc.s;
}

double dot_neon(const double* w, const double* v, std::size_t n) {
  float64x2_t s = vdupq_n_f64(0.0);
  float64x2_t c = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t term = vsubq_f64(vmulq_f64(vld1q_f64(w + i), vld1q_f64(v + i)), c);
    float64x2_t t = vaddq_f64(s, term);
    c = vsubq_f64(vsubq_f64(t, s), term);
    s = t;
  }
  KahanSum tail;
  for (; i < n; ++i) tail.add(w[i] * v[i]);
  return fold(s, c, tail);
}

double dot3_neon(const double* w, const double* a, const double* b, std::size_t n) {
  float64x2_t s = vdupq_n_f64(0.0);
  float64x2_t c = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t p = vmulq_f64(vmulq_f64(vld1q_f64(w + i), vld1q_f64(a + i)), vld1q_f64(b + i));
    float64x2_t term = vsubq_f64(p, c);
    float64x2_t t = vaddq_f64(s, term);
    c = vsubq_f64(vsubq_f64(t, s), term);
    s = t;
  }
  KahanSum tail;
  for (; i < n; ++i) tail.add(w[i] * a[i] * b[i]);
  return fold(s, c, tail);
}

std::complex<double> dot_sesq_neon(const double* w, const double* fre, const double* fim,
                                   const double* gre, const double* gim, std::size_t n) {
  float64x2_t sre = vdupq_n_f64(0.0);
  float64x2_t cre = vdupq_n_f64(0.0);
  float64x2_t sim = vdupq_n_f64(0.0);
  float64x2_t cim = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t wv = vld1q_f64(w + i);
    float64x2_t fr = vld1q_f64(fre + i);
    float64x2_t fi = vld1q_f64(fim + i);
    float64x2_t gr = vld1q_f64(gre + i);
    float64x2_t gi = vld1q_f64(gim + i);
    float64x2_t pre = vmulq_f64(wv, vaddq_f64(vmulq_f64(fr, gr), vmulq_f64(fi, gi)));
    float64x2_t pim = vmulq_f64(wv, vsubq_f64(vmulq_f64(fi, gr), vmulq_f64(fr, gi)));
    float64x2_t tre = vsubq_f64(pre, cre);
    float64x2_t t1 = vaddq_f64(sre, tre);
    cre = vsubq_f64(vsubq_f64(t1, sre), tre);
    sre = t1;
    float64x2_t tim = vsubq_f64(pim, cim);
    float64x2_t t2 = vaddq_f64(sim, tim);
    cim = vsubq_f64(vsubq_f64(t2, sim), tim);
    sim = t2;
  }
  KahanSum tre, tim;
  for (; i < n; ++i) {
    tre.add(w[i] * (fre[i] * gre[i] + fim[i] * gim[i]));
    tim.add(w[i] * (fim[i] * gre[i] - fre[i] * gim[i]));
  }
  return {fold(sre, cre, tre), fold(sim, cim, tim)};
}

void horner_neon(const std::complex<double>* c, std::size_t nc, const double* zre,
                 const double* zim, std::size_t n, double* outre, double* outim) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) outre[i] = outim[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t zr = vld1q_f64(zre + i);
    float64x2_t zi = vld1q_f64(zim + i);
    float64x2_t ar = vdupq_n_f64(c[nc - 1].real());
    float64x2_t ai = vdupq_n_f64(c[nc - 1].imag());
    for (std::size_t j = nc - 1; j-- > 0;) {
      float64x2_t nr = vaddq_f64(vsubq_f64(vmulq_f64(ar, zr), vmulq_f64(ai, zi)),
                                 vdupq_n_f64(c[j].real()));
      float64x2_t ni = vaddq_f64(vaddq_f64(vmulq_f64(ar, zi), vmulq_f64(ai, zr)),
                                 vdupq_n_f64(c[j].imag()));
      ar = nr;
      ai = ni;
    }
    vst1q_f64(outre + i, ar);
    vst1q_f64(outim + i, ai);
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

void horner_real_neon(const double* c, std::size_t nc, const double* x, std::size_t n,
                      double* out) {
  if (nc == 0) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t xv = vld1q_f64(x + i);
    float64x2_t a = vdupq_n_f64(c[nc - 1]);
    for (std::size_t j = nc - 1; j-- > 0;)
      a = vaddq_f64(vmulq_f64(a, xv), vdupq_n_f64(c[j]));
    vst1q_f64(out + i, a);
  }
  for (; i < n; ++i) {
    double a = c[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) a = a * x[i] + c[j];
    out[i] = a;
  }
}

void cmul_neon(double* are, double* aim, const double* bre, const double* bim, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t ar = vld1q_f64(are + i);
    float64x2_t ai = vld1q_f64(aim + i);
    float64x2_t br = vld1q_f64(bre + i);
    float64x2_t bi = vld1q_f64(bim + i);
    vst1q_f64(are + i, vsubq_f64(vmulq_f64(ar, br), vmulq_f64(ai, bi)));
    vst1q_f64(aim + i, vaddq_f64(vmulq_f64(ar, bi), vmulq_f64(ai, br)));
  }
  for (; i < n; ++i) {
    double ar = are[i];
    double ai = aim[i];
    are[i] = ar * bre[i] - ai * bim[i];
    aim[i] = ar * bim[i] + ai * bre[i];
  }
}

}  // namespace

const Ops neon_ops = {"neon",      dot_neon,         dot3_neon, dot_sesq_neon,
                      horner_neon, horner_real_neon, cmul_neon};

}  // namespace opucmat::kern

#endif  // aarch64
