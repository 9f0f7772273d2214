#include "kernels_detail.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace greypath::kernels::detail {

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d v0 = _mm256_setzero_pd();
  __m256d v1 = _mm256_setzero_pd();
  __m256d v2 = _mm256_setzero_pd();
  __m256d v3 = _mm256_setzero_pd();
  std::size_t n16 = n - n % kBlock;
  for (std::size_t i = 0; i < n16; i += kBlock) {
    v0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), v0);
    v1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), v1);
    v2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), v2);
    v3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), v3);
  }
  double acc[kBlock];
  _mm256_storeu_pd(acc + 0, v0);
  _mm256_storeu_pd(acc + 4, v1);
  _mm256_storeu_pd(acc + 8, v2);
  _mm256_storeu_pd(acc + 12, v3);
  tail_dot(a, b, n16, n, acc);
  return reduce16(acc);
}

double sum_squared_diffs_avx2(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  std::size_t m = n - 1;
  __m256d v0 = _mm256_setzero_pd();
  __m256d v1 = _mm256_setzero_pd();
  __m256d v2 = _mm256_setzero_pd();
  __m256d v3 = _mm256_setzero_pd();
  std::size_t m16 = m - m % kBlock;
  for (std::size_t i = 0; i < m16; i += kBlock) {
    __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
    __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 5), _mm256_loadu_pd(x + i + 4));
    __m256d d2 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 9), _mm256_loadu_pd(x + i + 8));
    __m256d d3 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 13), _mm256_loadu_pd(x + i + 12));
    v0 = _mm256_fmadd_pd(d0, d0, v0);
    v1 = _mm256_fmadd_pd(d1, d1, v1);
    v2 = _mm256_fmadd_pd(d2, d2, v2);
    v3 = _mm256_fmadd_pd(d3, d3, v3);
  }
  double acc[kBlock];
  _mm256_storeu_pd(acc + 0, v0);
  _mm256_storeu_pd(acc + 4, v1);
  _mm256_storeu_pd(acc + 8, v2);
  _mm256_storeu_pd(acc + 12, v3);
  for (std::size_t i = m16; i < m; ++i) {
    double d = x[i + 1] - x[i];
    acc[i % kBlock] = std::fma(d, d, acc[i % kBlock]);
  }
  return reduce16(acc);
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4) {
    __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (std::size_t i = n4; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_avx2(double a, double* x, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t n4 = n - n % 4;
  for (std::size_t i = 0; i < n4; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (std::size_t i = n4; i < n; ++i) x[i] *= a;
}

}  // namespace greypath::kernels::detail

#endif  // __x86_64__
