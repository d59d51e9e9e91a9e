#include "backends.hpp"

// NEON variants for aarch64. NEON is baseline on aarch64, so no extra
// compile flags are needed; on other targets this file compiles to nothing.
#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include <cmath>

namespace gustsurf::kernels::neon {

double dot(const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
  }
  double result = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) result += x[i] * y[i];
  return result;
}

double sum_squares(const double* x, std::size_t n) {
  std::size_t i = 0;
  float64x2_t acc = vdupq_n_f64(0.0);
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double result = vaddvq_f64(acc);
  for (; i < n; ++i) result += x[i] * x[i];
  return result;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  const float64x2_t av = vdupq_n_f64(a);
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  std::size_t i = 0;
  const float64x2_t av = vdupq_n_f64(a);
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(av, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

double max_abs(const double* x, std::size_t n) {
  std::size_t i = 0;
  float64x2_t acc = vdupq_n_f64(0.0);
  for (; i + 2 <= n; i += 2) {
    acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) {
    double v = std::fabs(x[i]);
    if (v > m) m = v;
  }
  return m;
}

}  // namespace gustsurf::kernels::neon

#endif  // aarch64
