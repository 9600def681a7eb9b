#pragma once

#include <complex>
#include <cstddef>

// Internal dispatch table shared by the per-ISA translation units.

namespace opucmat::kern {

struct Ops {
  const char* name;
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot3)(const double*, const double*, const double*, std::size_t);
  std::complex<double> (*dot_sesq)(const double*, const double*, const double*,
                                   const double*, const double*, std::size_t);
  void (*horner)(const std::complex<double>*, std::size_t, const double*, const double*,
                 std::size_t, double*, double*);
  void (*horner_real)(const double*, std::size_t, const double*, std::size_t, double*);
  void (*cmul)(double*, double*, const double*, const double*, std::size_t);
};

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

// Kahan accumulator used by all backends for lane folding and scalar tails.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double term) {
    term -= c;
    double t = s + term;
    c = (t - s) - term;
    s = t;
  }
};

}  // namespace opucmat::kern
