#include "maxwell/shape.hpp"

#include <cmath>
#include <string>

namespace maxwell {
namespace {

// 1D quadratic Lagrange polynomials on {-1, 0, 1}.
struct Quad1D {
  double v[3];
  double d[3];
};

Quad1D lagrange3(double s) {
  return {{0.5 * s * (s - 1.0), 1.0 - s * s, 0.5 * s * (s + 1.0)},
          {s - 0.5, -2.0 * s, s + 0.5}};
}

// Q9 node -> (index of xi polynomial, index of eta polynomial) into lagrange3.
constexpr int kQ9Xi[9] = {0, 2, 2, 0, 1, 2, 1, 0, 1};
constexpr int kQ9Eta[9] = {0, 0, 2, 2, 0, 1, 2, 1, 1};

constexpr RefPoint kQ4Nodes[4] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
constexpr RefPoint kQ9Nodes[9] = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}, {0, -1},
                                  {1, 0},   {0, 1},  {-1, 0}, {0, 0}};
constexpr RefPoint kT6Nodes[6] = {{0, 0}, {1, 0}, {0, 1}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}};

// Local edge tables. Directions follow the positive sense of each basis
// function: +xi / +eta for quads, a -> b for Whitney factors (a grad b - b grad a).
constexpr LocalEdge kEQ4Edges[4] = {{0, 1, 0}, {3, 2, 2}, {0, 3, 3}, {1, 2, 1}};
constexpr LocalEdge kEQ12Edges[12] = {{0, 4, 0},  {4, 1, 0}, {7, 8, -1}, {8, 5, -1},
                                      {3, 6, 2},  {6, 2, 2}, {0, 7, 3},  {4, 8, -1},
                                      {1, 5, 1},  {7, 3, 3}, {8, 6, -1}, {5, 2, 1}};
constexpr LocalEdge kET3Edges[3] = {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}};
constexpr LocalEdge kET8Edges[8] = {{1, 4, 1}, {4, 2, 1}, {2, 5, 2},  {5, 0, 2},
                                    {0, 3, 0}, {3, 1, 0}, {5, 4, -1}, {4, 3, -1}};

constexpr int kQ4Sides[4][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
constexpr int kQ9Sides[4][3] = {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {3, 0, 7}};
constexpr int kT3Sides[3][2] = {{0, 1}, {1, 2}, {2, 0}};
constexpr int kT6Sides[3][3] = {{0, 1, 3}, {1, 2, 4}, {2, 0, 5}};

// Covariant reference components of one edge basis function:
// v = c_xi grad(xi) + c_eta grad(eta), curl v = curl_ref / detJ with
// curl_ref = d(c_eta)/d(xi) - d(c_xi)/d(eta).
struct Covariant {
  double c_xi;
  double c_eta;
  double curl_ref;
};

void covariant_eq4(RefPoint p, std::span<const double> l, std::span<Covariant> out) {
  const double xi = p.xi, eta = p.eta;
  out[0] = {0.25 * l[0] * (1.0 - eta), 0.0, 0.25 * l[0]};
  out[1] = {0.25 * l[1] * (1.0 + eta), 0.0, -0.25 * l[1]};
  out[2] = {0.0, 0.25 * l[2] * (1.0 - xi), -0.25 * l[2]};
  out[3] = {0.0, 0.25 * l[3] * (1.0 + xi), 0.25 * l[3]};
}

void covariant_eq12(RefPoint p, std::span<const double> l, std::span<Covariant> out) {
  const double xi = p.xi, eta = p.eta;
  // Functions along grad(xi): c_xi = s * g(eta) * h(xi), curl_ref = -s g'(eta) h(xi).
  auto along_xi = [](double s, double g, double dg, double h) {
    return Covariant{s * g * h, 0.0, -s * dg * h};
  };
  // Functions along grad(eta): c_eta = s * g(xi) * h(eta), curl_ref = s g'(xi) h(eta).
  auto along_eta = [](double s, double g, double dg, double h) {
    return Covariant{0.0, s * g * h, s * dg * h};
  };
  const double em = eta * (eta - 1.0), dem = 2.0 * eta - 1.0;  // eta(eta-1)
  const double ep = eta * (eta + 1.0), dep = 2.0 * eta + 1.0;  // eta(eta+1)
  const double e2 = eta * eta - 1.0, de2 = 2.0 * eta;          // eta^2-1
  const double xm = xi * (xi - 1.0), dxm = 2.0 * xi - 1.0;
  const double xp = xi * (xi + 1.0), dxp = 2.0 * xi + 1.0;
  const double x2 = xi * xi - 1.0, dx2 = 2.0 * xi;

  out[0] = along_xi(-0.5 * l[0], em, dem, xi - 0.5);
  out[1] = along_xi(0.5 * l[1], em, dem, xi + 0.5);
  out[2] = along_xi(l[2], e2, de2, xi - 0.5);
  out[3] = along_xi(-l[3], e2, de2, xi + 0.5);
  out[4] = along_xi(-0.5 * l[4], ep, dep, xi - 0.5);
  out[5] = along_xi(0.5 * l[5], ep, dep, xi + 0.5);
  out[6] = along_eta(-0.5 * l[6], xm, dxm, eta - 0.5);
  out[7] = along_eta(l[7], x2, dx2, eta - 0.5);
  out[8] = along_eta(-0.5 * l[8], xp, dxp, eta - 0.5);
  out[9] = along_eta(0.5 * l[9], xm, dxm, eta + 0.5);
  out[10] = along_eta(-l[10], x2, dx2, eta + 0.5);
  out[11] = along_eta(0.5 * l[11], xp, dxp, eta + 0.5);
}

// Whitney factors a grad(b) - b grad(a) in covariant components, each with
// reference curl 2.
struct Whitney {
  double c_xi, c_eta;
};

Whitney w_xi_eta(RefPoint p) { return {-p.eta, p.xi}; }
Whitney w_eta_alpha(RefPoint p) { return {-p.eta, p.xi - 1.0}; }
Whitney w_alpha_xi(RefPoint p) { return {1.0 - p.eta, p.xi}; }

// l * f * w with f linear: curl_ref = l (f_xi w_eta - f_eta w_xi + 2 f).
Covariant scaled(double l, double f, double f_xi, double f_eta, Whitney w) {
  return {l * f * w.c_xi, l * f * w.c_eta, l * (f_xi * w.c_eta - f_eta * w.c_xi + 2.0 * f)};
}

void covariant_et3(RefPoint p, std::span<const double> l, std::span<Covariant> out) {
  out[0] = scaled(l[0], 1.0, 0.0, 0.0, w_alpha_xi(p));
  out[1] = scaled(l[1], 1.0, 0.0, 0.0, w_xi_eta(p));
  out[2] = scaled(l[2], 1.0, 0.0, 0.0, w_eta_alpha(p));
}

void covariant_et8(RefPoint p, std::span<const double> l, std::span<Covariant> out) {
  const double xi = p.xi, eta = p.eta, alpha = p.alpha();
  const Whitney wxe = w_xi_eta(p), wea = w_eta_alpha(p), wax = w_alpha_xi(p);
  out[0] = scaled(l[0], 4.0 * xi - 1.0, 4.0, 0.0, wxe);
  out[1] = scaled(l[1], 4.0 * eta - 1.0, 0.0, 4.0, wxe);
  out[2] = scaled(l[2], 4.0 * eta - 1.0, 0.0, 4.0, wea);
  out[3] = scaled(l[3], 4.0 * alpha - 1.0, -4.0, -4.0, wea);
  out[4] = scaled(l[4], 4.0 * alpha - 1.0, -4.0, -4.0, wax);
  out[5] = scaled(l[5], 4.0 * xi - 1.0, 4.0, 0.0, wax);
  out[6] = scaled(l[6], 4.0 * eta, 0.0, 4.0, wax);
  out[7] = scaled(l[7], 4.0 * xi, 4.0, 0.0, wea);
}

int covariant_basis(ElementKind kind, RefPoint p, std::span<const double> lengths,
                    std::span<Covariant, kMaxEdges> out) {
  const int n = traits(kind).edge_count;
  if (n == 0) throw InputError("edge basis requested for nodal kind " + std::string(to_string(kind)));
  if (static_cast<int>(lengths.size()) < n) throw InputError("too few edge lengths");
  switch (kind) {
    case ElementKind::EQ4: covariant_eq4(p, lengths, out); break;
    case ElementKind::EQ12: covariant_eq12(p, lengths, out); break;
    case ElementKind::ET3: covariant_et3(p, lengths, out); break;
    case ElementKind::ET8: covariant_et8(p, lengths, out); break;
    default: break;
  }
  return n;
}

Vec2 to_physical(const GeometryMap& geo, const Covariant& c) {
  return geo.grad_xi * c.c_xi + geo.grad_eta * c.c_eta;
}

}  // namespace

bool inside_reference(ElementKind kind, RefPoint p, double tol) {
  if (traits(kind).is_triangle) {
    return p.xi >= -tol && p.eta >= -tol && p.alpha() >= -tol;
  }
  return std::abs(p.xi) <= 1.0 + tol && std::abs(p.eta) <= 1.0 + tol;
}

RefPoint reference_node(ElementKind kind, int i) {
  switch (geometry_kind(kind)) {
    case ElementKind::Q4: return kQ4Nodes[i];
    case ElementKind::Q9: return kQ9Nodes[i];
    case ElementKind::T6: return kT6Nodes[i];
    case ElementKind::T3: return kT6Nodes[i];
    default: break;
  }
  return {};
}

namespace {

NodalShapeEval nodal_shape_raw(ElementKind kind, RefPoint p) {
  NodalShapeEval s;
  const double xi = p.xi, eta = p.eta;
  switch (geometry_kind(kind)) {
    case ElementKind::Q4: {
      s.count = 4;
      for (int i = 0; i < 4; ++i) {
        const double a = kQ4Nodes[i].xi, b = kQ4Nodes[i].eta;
        s.values[i] = 0.25 * (1.0 + a * xi) * (1.0 + b * eta);
        s.d_dxi[i] = 0.25 * a * (1.0 + b * eta);
        s.d_deta[i] = 0.25 * b * (1.0 + a * xi);
      }
      break;
    }
    case ElementKind::Q9: {
      s.count = 9;
      const Quad1D lx = lagrange3(xi), ly = lagrange3(eta);
      for (int i = 0; i < 9; ++i) {
        s.values[i] = lx.v[kQ9Xi[i]] * ly.v[kQ9Eta[i]];
        s.d_dxi[i] = lx.d[kQ9Xi[i]] * ly.v[kQ9Eta[i]];
        s.d_deta[i] = lx.v[kQ9Xi[i]] * ly.d[kQ9Eta[i]];
      }
      break;
    }
    case ElementKind::T3: {
      s.count = 3;
      s.values = {1.0 - xi - eta, xi, eta};
      s.d_dxi = {-1.0, 1.0, 0.0};
      s.d_deta = {-1.0, 0.0, 1.0};
      break;
    }
    case ElementKind::T6: {
      s.count = 6;
      const double a = 1.0 - xi - eta;
      s.values = {a * (2.0 * a - 1.0), xi * (2.0 * xi - 1.0), eta * (2.0 * eta - 1.0),
                  4.0 * a * xi,        4.0 * xi * eta,        4.0 * eta * a};
      s.d_dxi = {1.0 - 4.0 * a, 4.0 * xi - 1.0, 0.0, 4.0 * (a - xi), 4.0 * eta, -4.0 * eta};
      s.d_deta = {1.0 - 4.0 * a, 0.0, 4.0 * eta - 1.0, -4.0 * xi, 4.0 * xi, 4.0 * (a - eta)};
      break;
    }
    default: break;
  }
  return s;
}

}  // namespace

NodalShapeEval eval_nodal_shape(ElementKind kind, RefPoint p) {
  if (!inside_reference(kind, p)) {
    throw InputError("reference point (" + std::to_string(p.xi) + ", " + std::to_string(p.eta) +
                     ") outside " + std::string(to_string(kind)) + " reference element");
  }
  return nodal_shape_raw(kind, p);
}

GeometryMap geometry_map_unchecked(ElementKind kind, std::span<const Vec2> coords, RefPoint p) {
  const NodalShapeEval s = nodal_shape_raw(kind, p);
  if (static_cast<int>(coords.size()) != s.count) {
    throw InputError(std::string(to_string(kind)) + " expects " + std::to_string(s.count) +
                     " nodes, got " + std::to_string(coords.size()));
  }
  GeometryMap g;
  for (int i = 0; i < s.count; ++i) {
    g.J[0][0] += s.d_dxi[i] * coords[i].x;
    g.J[0][1] += s.d_dxi[i] * coords[i].y;
    g.J[1][0] += s.d_deta[i] * coords[i].x;
    g.J[1][1] += s.d_deta[i] * coords[i].y;
    g.x += coords[i] * s.values[i];
  }
  g.detJ = g.J[0][0] * g.J[1][1] - g.J[0][1] * g.J[1][0];
  const double inv = 1.0 / g.detJ;
  g.Gamma[0][0] = g.J[1][1] * inv;
  g.Gamma[0][1] = -g.J[0][1] * inv;
  g.Gamma[1][0] = -g.J[1][0] * inv;
  g.Gamma[1][1] = g.J[0][0] * inv;
  g.grad_xi = {g.Gamma[0][0], g.Gamma[1][0]};
  g.grad_eta = {g.Gamma[0][1], g.Gamma[1][1]};
  return g;
}

GeometryMap geometry_map(ElementKind kind, std::span<const Vec2> coords, RefPoint p) {
  GeometryMap g = geometry_map_unchecked(kind, coords, p);
  if (!(g.detJ > 0.0)) {
    throw NumericalError("non-positive Jacobian determinant " + std::to_string(g.detJ) +
                         " in " + std::string(to_string(kind)) + " cell");
  }
  return g;
}

std::span<const LocalEdge> local_edges(ElementKind kind) {
  switch (kind) {
    case ElementKind::EQ4: return kEQ4Edges;
    case ElementKind::EQ12: return kEQ12Edges;
    case ElementKind::ET3: return kET3Edges;
    case ElementKind::ET8: return kET8Edges;
    default: return {};
  }
}

std::span<const int> side_nodes(ElementKind kind, int s) {
  switch (geometry_kind(kind)) {
    case ElementKind::Q4: return kQ4Sides[s];
    case ElementKind::Q9: return kQ9Sides[s];
    case ElementKind::T3: return kT3Sides[s];
    case ElementKind::T6: return kT6Sides[s];
    default: return {};
  }
}

EdgeShapeEval eval_edge_shape(ElementKind kind, RefPoint p, const GeometryMap& geo,
                              std::span<const double> lengths) {
  if (!(geo.detJ > 0.0)) throw NumericalError("degenerate geometry in edge basis evaluation");
  std::array<Covariant, kMaxEdges> cov{};
  EdgeShapeEval e;
  e.count = covariant_basis(kind, p, lengths, cov);
  const double inv_det = 1.0 / geo.detJ;
  for (int i = 0; i < e.count; ++i) {
    e.values[i] = to_physical(geo, cov[i]);
    e.curls[i] = cov[i].curl_ref * inv_det;
  }
  return e;
}

EdgeShapeEval eval_edge_shape_fd(ElementKind kind, std::span<const Vec2> coords, RefPoint p,
                                 std::span<const double> lengths, double h) {
  const ElementKind gk = geometry_kind(kind);
  const GeometryMap geo = geometry_map(gk, coords, p);
  auto field = [&](RefPoint q) {
    const GeometryMap g = geometry_map_unchecked(gk, coords, q);
    std::array<Covariant, kMaxEdges> cov{};
    covariant_basis(kind, q, lengths, cov);
    std::array<Vec2, kMaxEdges> v{};
    for (int i = 0; i < kMaxEdges; ++i) v[i] = to_physical(g, cov[i]);
    return v;
  };
  const auto xp = field({p.xi + h, p.eta});
  const auto xm = field({p.xi - h, p.eta});
  const auto yp = field({p.xi, p.eta + h});
  const auto ym = field({p.xi, p.eta - h});

  EdgeShapeEval e;
  std::array<Covariant, kMaxEdges> cov{};
  e.count = covariant_basis(kind, p, lengths, cov);
  for (int i = 0; i < e.count; ++i) {
    e.values[i] = to_physical(geo, cov[i]);
    const Vec2 d_dxi = (xp[i] - xm[i]) * (0.5 / h);
    const Vec2 d_deta = (yp[i] - ym[i]) * (0.5 / h);
    const double dvy_dx = geo.Gamma[0][0] * d_dxi.y + geo.Gamma[0][1] * d_deta.y;
    const double dvx_dy = geo.Gamma[1][0] * d_dxi.x + geo.Gamma[1][1] * d_deta.x;
    e.curls[i] = dvy_dx - dvx_dy;
  }
  return e;
}

}  // namespace maxwell
