#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace opucmat::kern {

// Weighted reductions over quadrature node arrays and dense polynomial
// evaluation on split re/im grids. Scalar reference implementations always
// exist; AVX2 (x86-64) and NEON (aarch64) variants are selected at runtime
// when available. Reductions use compensated accumulation in every backend,
// so results agree to roughly machine precision even for cancellation-heavy
// sums.

// sum_k w[k] * v[k]
double dot(const double* w, const double* v, std::size_t n);

// sum_k w[k] * a[k] * b[k]
double dot3(const double* w, const double* a, const double* b, std::size_t n);

// sum_k w[k] * f[k] * conj(g[k]) with f = fre + i fim, g = gre + i gim
std::complex<double> dot_sesq(const double* w, const double* fre, const double* fim,
                              const double* gre, const double* gim, std::size_t n);

// out[k] = sum_j c[j] * z[k]^j, ascending coefficients, Horner form
void horner(const std::complex<double>* c, std::size_t nc, const double* zre,
            const double* zim, std::size_t n, double* outre, double* outim);

// out[k] = sum_j c[j] * x[k]^j for real coefficients
void horner_real(const double* c, std::size_t nc, const double* x, std::size_t n,
                 double* out);

// (are,aim)[k] *= (bre,bim)[k] componentwise complex product; the a and b
// arrays must not overlap
void cmul_inplace(double* are, double* aim, const double* bre, const double* bim,
                  std::size_t n);

// Name of the active backend: "scalar", "avx2" or "neon".
std::string backend();

// Force a backend by name (tests); throws std::invalid_argument if unknown or
// unsupported on this CPU. backend_auto() restores detection.
void backend_force(const std::string& name);
void backend_auto();

}  // namespace opucmat::kern
