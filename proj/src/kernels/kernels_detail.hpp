#pragma once

#include <cmath>
#include <cstddef>

namespace greypath::kernels::detail {

inline constexpr std::size_t kBlock = 16;  // 4 vectors x 4 lanes

// Fixed reduction tree shared by all backends. acc[j] accumulates the
// elements with index j mod 16; the pairwise tree below defines the one
// true summation order.
inline double reduce16(const double acc[kBlock]) {
  double s0 = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  double s1 = (acc[4] + acc[5]) + (acc[6] + acc[7]);
  double s2 = (acc[8] + acc[9]) + (acc[10] + acc[11]);
  double s3 = (acc[12] + acc[13]) + (acc[14] + acc[15]);
  return (s0 + s1) + (s2 + s3);
}

inline void tail_dot(const double* a, const double* b, std::size_t from,
                     std::size_t n, double acc[kBlock]) {
  for (std::size_t i = from; i < n; ++i)
    acc[i % kBlock] = std::fma(a[i], b[i], acc[i % kBlock]);
}

double dot_scalar(const double* a, const double* b, std::size_t n);
double sum_squared_diffs_scalar(const double* x, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* x, std::size_t n);

#if defined(__x86_64__)
double dot_avx2(const double* a, const double* b, std::size_t n);
double sum_squared_diffs_avx2(const double* x, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
#endif

}  // namespace greypath::kernels::detail
