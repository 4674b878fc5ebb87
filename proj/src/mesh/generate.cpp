#include <cmath>
#include <functional>
#include <unordered_map>

#include "maxwell/mesh.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

namespace {

struct Lat {
  int a;
  int b;
};

// Structured builder over an integer lattice (a, b). Geometry order p puts
// quadratic nodes on half steps, so a cell (i, j) spans [p i, p i + p] x
// [p j, p j + p]. Nodes are deduplicated by a canonical key.
class LatticeBuilder {
 public:
  using KeyFn = std::function<std::int64_t(Lat)>;
  using PosFn = std::function<Vec2(Lat)>;

  LatticeBuilder(int order, KeyFn key, PosFn pos, bool polar_center)
      : p_(order), key_(std::move(key)), pos_(std::move(pos)), polar_center_(polar_center) {}

  int node(Lat l) {
    const std::int64_t k = key_(l);
    auto it = ids_.find(k);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(mesh_.nodes.size());
    mesh_.nodes.push_back(pos_(l));
    ids_.emplace(k, id);
    return id;
  }

  // Lattice midpoint; a spoke from the polar center keeps the outer angle.
  Lat mid(Lat u, Lat v) const {
    if (polar_center_ && u.a == 0) return {v.a / 2, v.b};
    if (polar_center_ && v.a == 0) return {u.a / 2, u.b};
    return {(u.a + v.a) / 2, (u.b + v.b) / 2};
  }

  void quad(ElementKind kind, int i, int j, int material) {
    const Lat c[4] = {{p_ * i, p_ * j}, {p_ * i + p_, p_ * j}, {p_ * i + p_, p_ * j + p_},
                      {p_ * i, p_ * j + p_}};
    Cell cell{kind, {}, material};
    for (const Lat& l : c) cell.nodes.push_back(node(l));
    if (p_ == 2) {
      for (int s = 0; s < 4; ++s) cell.nodes.push_back(node(mid(c[s], c[(s + 1) % 4])));
      cell.nodes.push_back(node({p_ * i + 1, p_ * j + 1}));
    }
    mesh_.cells.push_back(std::move(cell));
  }

  void triangle(ElementKind kind, Lat v0, Lat v1, Lat v2, int material) {
    const Lat v[3] = {v0, v1, v2};
    Cell cell{kind, {}, material};
    for (const Lat& l : v) cell.nodes.push_back(node(l));
    if (p_ == 2) {
      for (int s = 0; s < 3; ++s) cell.nodes.push_back(node(mid(v[s], v[(s + 1) % 3])));
    }
    mesh_.cells.push_back(std::move(cell));
  }

  // Quad cell (i, j) split along its (0,0)-(1,1) diagonal.
  void split_quad(ElementKind kind, int i, int j, int material) {
    const Lat c00{p_ * i, p_ * j}, c10{p_ * i + p_, p_ * j}, c11{p_ * i + p_, p_ * j + p_},
        c01{p_ * i, p_ * j + p_};
    triangle(kind, c00, c10, c11, material);
    triangle(kind, c00, c11, c01, material);
  }

  void cell(ElementKind kind, int i, int j, int material) {
    if (traits(kind).is_triangle) {
      split_quad(kind, i, j, material);
    } else {
      quad(kind, i, j, material);
    }
  }

  int order() const { return p_; }
  Mesh& mesh() { return mesh_; }

 private:
  int p_;
  KeyFn key_;
  PosFn pos_;
  bool polar_center_;
  std::unordered_map<std::int64_t, int> ids_;
  Mesh mesh_;
};

std::int64_t pack(int layer, int a, int b) {
  return (static_cast<std::int64_t>(layer) << 44) | (static_cast<std::int64_t>(a) << 22) |
         static_cast<std::int64_t>(b);
}

BoundaryCurve line(Vec2 a, Vec2 b) {
  BoundaryCurve c;
  c.type = BoundaryCurve::Type::line;
  c.from = a;
  c.to = b;
  return c;
}

BoundaryCurve arc(double r, double t0, double t1, int outward) {
  BoundaryCurve c;
  c.type = BoundaryCurve::Type::arc;
  c.radius = r;
  c.theta0 = t0;
  c.theta1 = t1;
  c.outward = outward;
  return c;
}

void finish(Mesh& mesh) {
  mesh.boundary = exterior_sides(mesh);
  for (BoundarySide& b : mesh.boundary) {
    b.curve = classify_side(mesh, b.cell, b.side);
    if (b.curve < 0) throw MeshError("generated boundary side matches no curve");
  }
  mesh.validate();
}

Mesh square_mesh(const DomainSpec& spec, ElementKind kind, MeshSize size) {
  const int nx = size.n, ny = size.m_or_n();
  const int p = traits(kind).geometry_order;
  const double h = spec.side;
  LatticeBuilder lb(
      p, [](Lat l) { return pack(0, l.a, l.b); },
      [=](Lat l) { return Vec2{h * l.a / (p * nx), h * l.b / (p * ny)}; }, false);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) lb.cell(kind, i, j, 1);
  }
  Mesh mesh = std::move(lb.mesh());
  mesh.curves = {line({0, 0}, {h, 0}), line({h, 0}, {h, h}), line({h, h}, {0, h}),
                 line({0, h}, {0, 0})};
  return mesh;
}

// [0, side]^2 without the upper-right quadrant; n cells per quadrant side.
Mesh l_mesh(const DomainSpec& spec, ElementKind kind, int n) {
  const int p = traits(kind).geometry_order;
  const double h = spec.side, q = spec.side / 2.0;
  LatticeBuilder lb(
      p, [](Lat l) { return pack(0, l.a, l.b); },
      [=](Lat l) { return Vec2{h * l.a / (2 * p * n), h * l.b / (2 * p * n)}; }, false);
  const bool inhomogeneous = spec.name == Domain::inhomogeneous_l;
  for (int j = 0; j < 2 * n; ++j) {
    for (int i = 0; i < 2 * n; ++i) {
      if (i >= n && j >= n) continue;
      int material = 1;
      if (inhomogeneous) {
        const bool corner = i < n && j < n;
        const bool arm_x = i >= n;
        const bool arm_y = j >= n;
        switch (spec.dielectric) {
          case DielectricRegion::corner: material = corner ? 2 : 1; break;
          case DielectricRegion::arm: material = arm_x ? 2 : 1; break;
          case DielectricRegion::both_arms: material = (arm_x || arm_y) ? 2 : 1; break;
        }
      }
      lb.cell(kind, i, j, material);
    }
  }
  Mesh mesh = std::move(lb.mesh());
  mesh.curves = {line({0, 0}, {h, 0}), line({h, 0}, {h, q}), line({h, q}, {q, q}),
                 line({q, q}, {q, h}), line({q, h}, {0, h}), line({0, h}, {0, 0})};
  return mesh;
}

// Polar grid: k rings, m sectors, a triangle fan at the center. With a
// crack the last angular lattice line is a separate copy of the first.
Mesh circle_mesh(const DomainSpec& spec, ElementKind kind, MeshSize size, bool cracked) {
  const int k = size.n, m = size.m_or_n();
  if (m < 3) throw MeshError("circle meshes need at least 3 sectors");
  const int p = traits(kind).geometry_order;
  const double R = spec.radius;
  const int period = p * m;
  auto key = [=](Lat l) {
    if (l.a == 0) return pack(0, 0, 0);
    if (cracked) return l.b == period ? pack(1, l.a, 0) : pack(0, l.a, l.b);
    return pack(0, l.a, ((l.b % period) + period) % period);
  };
  auto pos = [=](Lat l) {
    if (l.a == 0) return Vec2{0.0, 0.0};
    const int b = (l.b % period + period) % period;
    const double r = R * l.a / (p * k);
    const double t = 2.0 * kPi * b / period;
    return Vec2{r * std::cos(t), r * std::sin(t)};
  };
  LatticeBuilder lb(p, key, pos, true);
  const ElementKind tri = triangle_companion(kind);
  for (int j = 0; j < m; ++j) {
    lb.triangle(tri, {0, 0}, {p, p * j}, {p, p * j + p}, 1);
    for (int i = 1; i < k; ++i) lb.cell(kind, i, j, 1);
  }
  Mesh mesh = std::move(lb.mesh());
  mesh.curves = {arc(R, 0.0, 2.0 * kPi, 1)};
  if (cracked) {
    mesh.curves.push_back(line({0, 0}, {R, 0}));
    mesh.curves.push_back(line({R, 0}, {0, 0}));
    for (int a = 1; a <= p * k; ++a) mesh.seams.push_back({lb.node({a, 0}), lb.node({a, period})});
  }
  return mesh;
}

// Annular sector r0 <= r <= r2 over [0, a] joined to r1 <= r <= r2 over
// [a, 2a]; n radial cells per unit radius, m angular cells per sector.
Mesh curved_l_mesh(const DomainSpec& spec, ElementKind kind, MeshSize size) {
  const int k = size.n, m = size.m_or_n();
  const int p = traits(kind).geometry_order;
  const double r0 = spec.radii[0], r1 = spec.radii[1], r2 = spec.radii[2];
  const double a = spec.sector;
  const double unit = r1 - r0;
  if (std::abs((r2 - r1) - unit) > 1e-12) throw MeshError("curved L radii must be equally spaced");
  auto pos = [=](Lat l) {
    const double r = r0 + unit * l.a / (p * k);
    const double t = a * l.b / (p * m);
    return Vec2{r * std::cos(t), r * std::sin(t)};
  };
  LatticeBuilder lb(p, [](Lat l) { return pack(0, l.a, l.b); }, pos, false);
  for (int j = 0; j < 2 * m; ++j) {
    for (int i = j < m ? 0 : k; i < 2 * k; ++i) lb.cell(kind, i, j, 1);
  }
  Mesh mesh = std::move(lb.mesh());
  const Vec2 e1{std::cos(a), std::sin(a)}, e2{std::cos(2 * a), std::sin(2 * a)};
  mesh.curves = {line({r0, 0}, {r2, 0}), arc(r2, 0.0, 2 * a, 1),   line(e2 * r2, e2 * r1),
                 arc(r1, a, 2 * a, -1),  line(e1 * r1, e1 * r0),   arc(r0, 0.0, a, -1)};
  return mesh;
}

}  // namespace

Mesh generate_mesh(const DomainSpec& spec, ElementKind kind, MeshSize size) {
  if (size.n < 1 || size.m < 0) throw MeshError("mesh size must be at least 1");
  Mesh mesh;
  switch (spec.name) {
    case Domain::square: mesh = square_mesh(spec, kind, size); break;
    case Domain::l_shape:
    case Domain::inhomogeneous_l: mesh = l_mesh(spec, kind, size.n); break;
    case Domain::circle: mesh = circle_mesh(spec, kind, size, false); break;
    case Domain::cracked_circle: mesh = circle_mesh(spec, kind, size, true); break;
    case Domain::curved_l: mesh = curved_l_mesh(spec, kind, size); break;
  }
  finish(mesh);
  return mesh;
}

}  // namespace maxwell
