#include <immintrin.h>

#include "maxwell/kernels.hpp"

namespace maxwell::kernels::avx2 {

void rank1_upper(double* a, int lda, int n, double alpha, const double* x) {
  for (int i = 0; i < n; ++i) {
    const double ai = alpha * x[i];
    if (ai == 0.0) continue;
    double* row = a + static_cast<long>(i) * lda;
    const __m256d va = _mm256_set1_pd(ai);
    int j = i;
    for (; j + 4 <= n; j += 4) {
      const __m256d r = _mm256_loadu_pd(row + j);
      _mm256_storeu_pd(row + j, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j), r));
    }
    for (; j < n; ++j) row[j] += ai * x[j];
  }
}

double dot(const double* x, const double* y, int n) {
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace maxwell::kernels::avx2
