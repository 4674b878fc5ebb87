#include <doctest.h>

#include <random>
#include <vector>

#include "maxwell/kernels.hpp"

using namespace maxwell;

TEST_CASE("backend selection") {
  const kernels::Backend before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  kernels::set_backend(kernels::Backend::avx2);
  CHECK(kernels::active_backend() ==
        (kernels::avx2_available() ? kernels::Backend::avx2 : kernels::Backend::scalar));
  CHECK(kernels::to_string(kernels::Backend::avx2) == "avx2");
  kernels::set_backend(before);
}

TEST_CASE("scalar kernels against hand values") {
  const double x[3] = {1.0, 2.0, -1.0};
  std::vector<double> a(9, 0.0);
  kernels::scalar::rank1_upper(a.data(), 3, 3, 2.0, x);
  CHECK(a[0] == 2.0);
  CHECK(a[1] == 4.0);
  CHECK(a[2] == -2.0);
  CHECK(a[4] == 8.0);
  CHECK(a[5] == -4.0);
  CHECK(a[8] == 2.0);
  CHECK(a[3] == 0.0);  // lower triangle untouched
  kernels::symmetrize_upper(a.data(), 3, 3);
  CHECK(a[3] == 4.0);
  CHECK(a[7] == -4.0);
  CHECK(kernels::scalar::dot(x, x, 3) == 6.0);
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!kernels::avx2_available()) return;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 1; n <= 39; ++n) {
    CAPTURE(n);
    std::vector<double> x(n), y(n), a(n * n), b;
    for (double& v : x) v = u(rng);
    for (double& v : y) v = u(rng);
    for (double& v : a) v = u(rng);
    b = a;
    kernels::scalar::rank1_upper(a.data(), n, n, 0.37, x.data());
    kernels::avx2::rank1_upper(b.data(), n, n, 0.37, x.data());
    for (int i = 0; i < n * n; ++i) CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-14));
    CHECK(kernels::avx2::dot(x.data(), y.data(), n) ==
          doctest::Approx(kernels::scalar::dot(x.data(), y.data(), n)).epsilon(1e-13));
  }
}
