#include "maxwell/kernels.hpp"

namespace maxwell::kernels::scalar {

void rank1_upper(double* a, int lda, int n, double alpha, const double* x) {
  for (int i = 0; i < n; ++i) {
    const double ai = alpha * x[i];
    if (ai == 0.0) continue;
    double* row = a + static_cast<long>(i) * lda;
    for (int j = i; j < n; ++j) row[j] += ai * x[j];
  }
}

double dot(const double* x, const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace maxwell::kernels::scalar
