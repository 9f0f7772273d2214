#pragma once

#include <cstddef>
#include <vector>

namespace greypath::linalg {

// Lower-triangular matrix in packed row-major storage: row i occupies
// entries [i*(i+1)/2, i*(i+1)/2 + i]. Rows are contiguous, which keeps the
// Cholesky inner loops plain dot products.
struct PackedLower {
  std::size_t n = 0;
  std::vector<double> a;  // n*(n+1)/2 entries

  double* row(std::size_t i) { return a.data() + i * (i + 1) / 2; }
  const double* row(std::size_t i) const { return a.data() + i * (i + 1) / 2; }
};

// In-place Cholesky of a symmetric positive definite matrix given by its
// packed lower triangle. Throws std::runtime_error if a pivot is not
// strictly positive (matrix not PD to working precision).
void cholesky_packed(PackedLower& m);

// out = L * z for packed lower-triangular L; out may not alias z.
void lower_matvec(const PackedLower& l, const double* z, double* out);

// Solves A w = b for a small dense SPD matrix A (row-major n x n),
// destroying a. Used for conditioning weights; n stays tiny.
void solve_spd_small(std::vector<double>& a, std::size_t n,
                     std::vector<double>& b);

}  // namespace greypath::linalg
