#pragma once

#include <cstddef>

namespace greypath::kernels {

enum class Backend { scalar, avx2 };

// Backend selected at process start: AVX2+FMA when the CPU reports support,
// scalar otherwise. GREYPATH_KERNELS=scalar in the environment forces the
// reference path.
Backend active_backend();
bool avx2_supported();

// Testing hook. Throws std::runtime_error if the requested backend is not
// available on this machine.
void force_backend(Backend b);

// All reductions use the same fixed 16-accumulator FMA blocking in every
// backend, so results are bit-identical regardless of which one runs.
double dot(const double* a, const double* b, std::size_t n);

// sum over i of (x[i+1] - x[i])^2; n is the number of values (n-1 diffs).
double sum_squared_diffs(const double* x, std::size_t n);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

// x[i] *= a
void scale(double a, double* x, std::size_t n);

}  // namespace greypath::kernels
