#include "maxwell/quadrature.hpp"

#include <cmath>

#include "maxwell/types.hpp"

namespace maxwell {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw InputError("Gauss-Legendre rule needs n >= 1");
  QuadratureRule r;
  r.degree = 2 * n - 1;
  r.points.resize(n);
  r.weights.resize(n);
  // Newton on Legendre P_n from Chebyshev-like initial guesses.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.points[i] = {-x, 0.0};
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

QuadratureRule quad_gauss(int n) {
  const QuadratureRule g = gauss_legendre(n);
  QuadratureRule r;
  r.degree = g.degree;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      r.points.push_back({g.points[i].xi, g.points[j].xi});
      r.weights.push_back(g.weights[i] * g.weights[j]);
    }
  }
  return r;
}

QuadratureRule triangle_collapsed(int n) {
  const QuadratureRule g = gauss_legendre(n);
  QuadratureRule r;
  r.degree = 2 * n - 2;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double u = 0.5 * (g.points[i].xi + 1.0);
      const double v = 0.5 * (g.points[j].xi + 1.0);
      r.points.push_back({u * (1.0 - v), v});
      r.weights.push_back(0.25 * g.weights[i] * g.weights[j] * (1.0 - v));
    }
  }
  return r;
}

namespace {

QuadratureRule triangle3() {
  QuadratureRule r;
  r.degree = 2;
  r.points = {{1.0 / 6.0, 1.0 / 6.0}, {2.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 3.0}};
  r.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
  return r;
}

QuadratureRule triangle7() {
  const double s15 = std::sqrt(15.0);
  const double a1 = (6.0 - s15) / 21.0, b1 = (9.0 + 2.0 * s15) / 21.0;
  const double a2 = (6.0 + s15) / 21.0, b2 = (9.0 - 2.0 * s15) / 21.0;
  const double w0 = 9.0 / 80.0;
  const double w1 = (155.0 - s15) / 2400.0;
  const double w2 = (155.0 + s15) / 2400.0;
  QuadratureRule r;
  r.degree = 5;
  r.points = {{1.0 / 3.0, 1.0 / 3.0}, {a1, a1}, {b1, a1}, {a1, b1}, {a2, a2}, {b2, a2}, {a2, b2}};
  r.weights = {w0, w1, w1, w1, w2, w2, w2};
  return r;
}

}  // namespace

QuadratureRule quadrature_rule(ElementKind kind) {
  switch (geometry_kind(kind)) {
    case ElementKind::Q4: return quad_gauss(2);
    case ElementKind::Q9: return quad_gauss(3);
    case ElementKind::T3: return triangle3();
    case ElementKind::T6: return triangle7();
    default: break;
  }
  throw InputError("no quadrature rule for kind");
}

QuadratureRule refined_rule(ElementKind kind) {
  switch (geometry_kind(kind)) {
    case ElementKind::Q4: return quad_gauss(4);
    case ElementKind::Q9: return quad_gauss(6);
    case ElementKind::T3: return triangle_collapsed(3);
    case ElementKind::T6: return triangle_collapsed(6);
    default: break;
  }
  throw InputError("no quadrature rule for kind");
}

}  // namespace maxwell
