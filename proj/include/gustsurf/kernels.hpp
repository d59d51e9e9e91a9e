#pragma once

#include <cstddef>
#include <string_view>

namespace gustsurf::kernels {

// Dense double-precision kernels behind all fitting and simulation inner
// loops.  A scalar reference implementation always exists; AVX2+FMA (x86-64)
// and NEON (aarch64) variants are selected once at startup from CPU features.
// The environment variable GUSTSURF_SIMD=scalar|avx2|neon|auto overrides
// detection; tests use force_backend() to cross-check variants.
enum class Backend { scalar, avx2, neon };

Backend active_backend();
bool backend_available(Backend backend);
std::string_view backend_name(Backend backend);

// Throws InvalidArgument if the backend is not available on this machine.
// Not safe to call concurrently with running kernels; intended for tests.
void force_backend(Backend backend);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

// sum_i x[i]^2
double sum_squares(const double* x, std::size_t n);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// x[i] *= a
void scale(double a, double* x, std::size_t n);

// max_i |x[i]|, 0 for n == 0
double max_abs(const double* x, std::size_t n);

}  // namespace gustsurf::kernels
