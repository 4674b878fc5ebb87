#pragma once

#include <vector>

#include "maxwell/element_kind.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

struct QuadratureRule {
  std::vector<RefPoint> points;
  std::vector<double> weights;
  int degree = 0;  // total polynomial degree integrated exactly (per variable for quads)
};

/// Default rule for an element kind: 2x2 Gauss for Q4/EQ4, 3x3 for Q9/EQ12,
/// 3-point degree-2 for T3/ET3, 7-point degree-5 for T6/ET8.
QuadratureRule quadrature_rule(ElementKind kind);

/// n-point Gauss-Legendre on [-1, 1] (n >= 1).
QuadratureRule gauss_legendre(int n);

/// n x n tensor Gauss rule on [-1, 1]^2.
QuadratureRule quad_gauss(int n);

/// Collapsed (Duffy) n x n Gauss rule on the unit triangle, exact to degree 2n-2.
QuadratureRule triangle_collapsed(int n);

/// Rule with roughly twice the exactness of quadrature_rule(kind).
QuadratureRule refined_rule(ElementKind kind);

}  // namespace maxwell
