#include "greypath/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "greypath/kernels.hpp"

namespace greypath::linalg {

void cholesky_packed(PackedLower& m) {
  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i) {
    double* ri = m.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      const double* rj = m.row(j);
      double s = ri[j] - kernels::dot(ri, rj, j);
      ri[j] = s / rj[j];
    }
    double d = ri[i] - kernels::dot(ri, ri, i);
    if (!(d > 0.0))
      throw std::runtime_error("cholesky: matrix not positive definite");
    ri[i] = std::sqrt(d);
  }
}

void lower_matvec(const PackedLower& l, const double* z, double* out) {
  for (std::size_t i = 0; i < l.n; ++i)
    out[i] = kernels::dot(l.row(i), z, i + 1);
}

void solve_spd_small(std::vector<double>& a, std::size_t n,
                     std::vector<double>& b) {
  // Unpivoted Cholesky solve; callers only pass well-conditioned matrices.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
      if (i == j) {
        if (!(s > 0.0))
          throw std::runtime_error("solve_spd_small: not positive definite");
        a[i * n + i] = std::sqrt(s);
      } else {
        a[i * n + j] = s / a[j * n + j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i * n + k] * b[k];
    b[i] = s / a[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= a[k * n + ii] * b[k];
    b[ii] = s / a[ii * n + ii];
  }
}

}  // namespace greypath::linalg
