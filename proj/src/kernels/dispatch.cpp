#include <atomic>

#include "maxwell/kernels.hpp"

namespace maxwell::kernels {

namespace {

Backend detect() { return avx2_available() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) b = Backend::scalar;
  current().store(b, std::memory_order_relaxed);
}

std::string_view to_string(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

void rank1_upper(double* a, int lda, int n, double alpha, const double* x) {
  if (active_backend() == Backend::avx2) {
    avx2::rank1_upper(a, lda, n, alpha, x);
  } else {
    scalar::rank1_upper(a, lda, n, alpha, x);
  }
}

void symmetrize_upper(double* a, int lda, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) a[static_cast<long>(i) * lda + j] = a[static_cast<long>(j) * lda + i];
  }
}

double dot(const double* x, const double* y, int n) {
  return active_backend() == Backend::avx2 ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

}  // namespace maxwell::kernels
