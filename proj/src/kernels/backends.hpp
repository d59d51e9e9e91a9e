#pragma once

#include <cstddef>

// Per-backend kernel entry points. Each namespace implements the full set;
// unavailable backends are simply never registered by the dispatcher.
namespace gustsurf::kernels {

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
double sum_squares(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scale(double a, double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace neon
#endif

}  // namespace gustsurf::kernels
