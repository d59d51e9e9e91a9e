#include "gustsurf/kernels.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "backends.hpp"
#include "gustsurf/errors.hpp"

namespace gustsurf::kernels {

namespace {

struct Vtable {
  Backend backend;
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
};

constexpr Vtable kScalarTable = {Backend::scalar, scalar::dot, scalar::sum_squares,
                                 scalar::axpy, scalar::scale, scalar::max_abs};

#if defined(__x86_64__) || defined(__i386__)
constexpr Vtable kAvx2Table = {Backend::avx2, avx2::dot, avx2::sum_squares,
                               avx2::axpy, avx2::scale, avx2::max_abs};
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
constexpr Vtable kNeonTable = {Backend::neon, neon::dot, neon::sum_squares,
                               neon::axpy, neon::scale, neon::max_abs};
#endif

const Vtable* table_for(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return &kScalarTable;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &kAvx2Table;
#endif
      return nullptr;
    case Backend::neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return &kNeonTable;
#endif
      return nullptr;
  }
  return nullptr;
}

const Vtable* best_table() {
  if (const Vtable* t = table_for(Backend::avx2)) return t;
  if (const Vtable* t = table_for(Backend::neon)) return t;
  return &kScalarTable;
}

const Vtable* detect() {
  const char* env = std::getenv("GUSTSURF_SIMD");
  if (env == nullptr || std::strcmp(env, "auto") == 0) return best_table();
  if (std::strcmp(env, "scalar") == 0) return &kScalarTable;
  const Vtable* requested = nullptr;
  if (std::strcmp(env, "avx2") == 0) {
    requested = table_for(Backend::avx2);
  } else if (std::strcmp(env, "neon") == 0) {
    requested = table_for(Backend::neon);
  } else {
    std::fprintf(stderr, "gustsurf: unknown GUSTSURF_SIMD value '%s', using auto\n", env);
    return best_table();
  }
  if (requested == nullptr) {
    std::fprintf(stderr, "gustsurf: GUSTSURF_SIMD=%s not available on this CPU, using auto\n", env);
    return best_table();
  }
  return requested;
}

std::atomic<const Vtable*>& active_table() {
  static std::atomic<const Vtable*> table{detect()};
  return table;
}

inline const Vtable& active() { return *active_table().load(std::memory_order_relaxed); }

}  // namespace

Backend active_backend() { return active().backend; }

bool backend_available(Backend backend) { return table_for(backend) != nullptr; }

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

void force_backend(Backend backend) {
  const Vtable* t = table_for(backend);
  if (t == nullptr) {
    throw InvalidArgument("kernel backend '" + std::string(backend_name(backend)) +
                          "' is not available on this machine");
  }
  active_table().store(t, std::memory_order_relaxed);
}

double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }

double sum_squares(const double* x, std::size_t n) { return active().sum_squares(x, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }

void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }

double max_abs(const double* x, std::size_t n) { return active().max_abs(x, n); }

}  // namespace gustsurf::kernels
