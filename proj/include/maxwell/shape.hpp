#pragma once

#include <array>
#include <span>

#include "maxwell/element_kind.hpp"
#include "maxwell/types.hpp"

namespace maxwell {

/// Point in the reference element: [-1,1]^2 for quads, the unit triangle
/// {xi, eta >= 0, xi + eta <= 1} for triangles.
struct RefPoint {
  double xi = 0.0;
  double eta = 0.0;
  constexpr double alpha() const { return 1.0 - xi - eta; }
};

inline constexpr int kMaxNodes = 9;
inline constexpr int kMaxEdges = 12;

struct NodalShapeEval {
  int count = 0;
  std::array<double, kMaxNodes> values{};
  std::array<double, kMaxNodes> d_dxi{};
  std::array<double, kMaxNodes> d_deta{};
};

/// Lagrange basis of the geometry of `kind` (edge kinds use their nodal
/// counterpart). Throws InputError if `p` lies outside the reference domain
/// by more than 1e-10.
NodalShapeEval eval_nodal_shape(ElementKind kind, RefPoint p);

/// Reference coordinates of local node `i`.
RefPoint reference_node(ElementKind kind, int i);

bool inside_reference(ElementKind kind, RefPoint p, double tol = 1e-10);

/// Jacobian data of the isoparametric map at one reference point.
/// J = [[dx/dxi, dy/dxi], [dx/deta, dy/deta]], Gamma = J^-1, so that
/// grad f = Gamma * (df/dxi, df/deta) and grad xi = (G11, G21),
/// grad eta = (G12, G22).
struct GeometryMap {
  std::array<std::array<double, 2>, 2> J{};
  std::array<std::array<double, 2>, 2> Gamma{};
  double detJ = 0.0;
  Vec2 grad_xi;
  Vec2 grad_eta;
  Vec2 x;  // physical image of the point

  /// Physical gradient from reference derivatives.
  Vec2 physical_gradient(double d_dxi, double d_deta) const {
    return {Gamma[0][0] * d_dxi + Gamma[0][1] * d_deta,
            Gamma[1][0] * d_dxi + Gamma[1][1] * d_deta};
  }
};

/// Throws NumericalError when detJ <= 0.
GeometryMap geometry_map(ElementKind kind, std::span<const Vec2> coords, RefPoint p);

/// Same as geometry_map but returns the raw map even if detJ <= 0.
GeometryMap geometry_map_unchecked(ElementKind kind, std::span<const Vec2> coords,
                                   RefPoint p);

struct EdgeShapeEval {
  int count = 0;
  std::array<Vec2, kMaxEdges> values{};
  std::array<double, kMaxEdges> curls{};
};

/// Local edge of an edge element: the dof's positive direction runs from
/// local node `from` to local node `to`. `side` is the element side the edge
/// lies on, or -1 for cell-private interior edges.
struct LocalEdge {
  int from;
  int to;
  int side;
};

std::span<const LocalEdge> local_edges(ElementKind kind);

/// Local node ids on side `s` in traversal order: two corners, then the
/// mid-side node for quadratic geometry.
std::span<const int> side_nodes(ElementKind kind, int s);

/// Edge basis with analytically differentiated curls. `lengths` are the
/// per-local-edge scale factors l_i.
EdgeShapeEval eval_edge_shape(ElementKind kind, RefPoint p, const GeometryMap& geo,
                              std::span<const double> lengths);

/// Edge basis whose curls come from central differences of the physical
/// field in reference coordinates (step h), with the geometry re-evaluated
/// at every shifted point. Used as a cross-check of the analytic path.
EdgeShapeEval eval_edge_shape_fd(ElementKind kind, std::span<const Vec2> coords,
                                 RefPoint p, std::span<const double> lengths,
                                 double h = 1e-6);

}  // namespace maxwell
