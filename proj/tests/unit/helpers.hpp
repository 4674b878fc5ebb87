#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "maxwell/assembly.hpp"
#include "maxwell/edges.hpp"
#include "maxwell/mesh.hpp"
#include "maxwell/shape.hpp"

namespace testutil {

using namespace maxwell;

/// Interior sample points of the reference element.
inline std::vector<RefPoint> sample_points(ElementKind kind) {
  if (traits(kind).is_triangle) {
    return {{0.2, 0.3}, {0.6, 0.1}, {0.1, 0.7}, {1.0 / 3, 1.0 / 3}, {0.45, 0.45}};
  }
  return {{-0.7, 0.2}, {0.3, -0.4}, {0.0, 0.0}, {0.8, 0.9}, {-0.5, -0.95}};
}

/// A mildly curved element of the given kind: reference nodes pushed through
/// a smooth invertible map.
inline std::vector<Vec2> curved_cell(ElementKind kind) {
  const int n = traits(geometry_kind(kind)).node_count;
  std::vector<Vec2> xs;
  const bool curved = traits(kind).geometry_order == 2;
  for (int i = 0; i < n; ++i) {
    const RefPoint r = reference_node(kind, i);
    double x = 1.3 * r.xi + 0.2 * r.eta + 0.4, y = -0.1 * r.xi + 0.9 * r.eta + 0.1;
    if (curved) {
      x += 0.08 * r.eta * r.eta;
      y += 0.05 * r.xi * r.xi;
    }
    xs.push_back({x, y});
  }
  return xs;
}

inline std::vector<double> cell_lengths(ElementKind kind, const std::vector<Vec2>& xs) {
  std::vector<double> l;
  for (const LocalEdge& e : local_edges(kind)) {
    l.push_back(mapped_length(kind, xs, reference_node(kind, e.from), reference_node(kind, e.to)));
  }
  return l;
}

inline Eigen::MatrixXd dense(const SparseMatrix& a) { return Eigen::MatrixXd(a); }

inline int numeric_rank(const Eigen::MatrixXd& a, double rel = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::VectorXd ev = es.eigenvalues().cwiseAbs();
  const double tol = rel * ev.maxCoeff();
  int r = 0;
  for (int i = 0; i < ev.size(); ++i) r += ev[i] > tol;
  return r;
}

}  // namespace testutil
