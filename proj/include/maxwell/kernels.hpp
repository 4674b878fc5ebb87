#pragma once

#include <string_view>

namespace maxwell::kernels {

/// Dense helpers used when building element matrices. Each has a scalar
/// reference implementation and an AVX2/FMA variant picked at runtime.
enum class Backend { scalar, avx2 };

bool avx2_available();
Backend active_backend();
/// Selecting avx2 on a CPU without it falls back to scalar.
void set_backend(Backend b);
std::string_view to_string(Backend b);

/// a(i, j) += alpha * x[i] * x[j] for i <= j (upper triangle, row-major, leading dimension lda).
void rank1_upper(double* a, int lda, int n, double alpha, const double* x);

/// Copies the upper triangle into the lower one.
void symmetrize_upper(double* a, int lda, int n);

double dot(const double* x, const double* y, int n);

namespace scalar {
void rank1_upper(double* a, int lda, int n, double alpha, const double* x);
double dot(const double* x, const double* y, int n);
}  // namespace scalar

namespace avx2 {
void rank1_upper(double* a, int lda, int n, double alpha, const double* x);
double dot(const double* x, const double* y, int n);
}  // namespace avx2

}  // namespace maxwell::kernels
