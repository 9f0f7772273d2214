#include "greypath/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace greypath::kernels {

namespace detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc[kBlock] = {};
  std::size_t n16 = n - n % kBlock;
  for (std::size_t i = 0; i < n16; i += kBlock)
    for (std::size_t j = 0; j < kBlock; ++j)
      acc[j] = std::fma(a[i + j], b[i + j], acc[j]);
  tail_dot(a, b, n16, n, acc);
  return reduce16(acc);
}

double sum_squared_diffs_scalar(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  std::size_t m = n - 1;
  double acc[kBlock] = {};
  std::size_t m16 = m - m % kBlock;
  for (std::size_t i = 0; i < m16; i += kBlock)
    for (std::size_t j = 0; j < kBlock; ++j) {
      double d = x[i + j + 1] - x[i + j];
      acc[j] = std::fma(d, d, acc[j]);
    }
  for (std::size_t i = m16; i < m; ++i) {
    double d = x[i + 1] - x[i];
    acc[i % kBlock] = std::fma(d, d, acc[i % kBlock]);
  }
  return reduce16(acc);
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

}  // namespace detail

bool avx2_supported() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend pick_default() {
  const char* env = std::getenv("GREYPATH_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return Backend::scalar;
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> g_backend{pick_default()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported())
    throw std::runtime_error("kernels: avx2 backend not supported on this cpu");
  g_backend.store(b, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t n) {
#if defined(__x86_64__)
  if (active_backend() == Backend::avx2) return detail::dot_avx2(a, b, n);
#endif
  return detail::dot_scalar(a, b, n);
}

double sum_squared_diffs(const double* x, std::size_t n) {
#if defined(__x86_64__)
  if (active_backend() == Backend::avx2)
    return detail::sum_squared_diffs_avx2(x, n);
#endif
  return detail::sum_squared_diffs_scalar(x, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
#if defined(__x86_64__)
  if (active_backend() == Backend::avx2) return detail::axpy_avx2(a, x, y, n);
#endif
  detail::axpy_scalar(a, x, y, n);
}

void scale(double a, double* x, std::size_t n) {
#if defined(__x86_64__)
  if (active_backend() == Backend::avx2) return detail::scale_avx2(a, x, n);
#endif
  detail::scale_scalar(a, x, n);
}

}  // namespace greypath::kernels
