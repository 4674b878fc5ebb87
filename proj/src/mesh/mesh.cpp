#include "maxwell/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "maxwell/quadrature.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

namespace {

double wrap_angle(double t, double lo) {
  const double two_pi = 2.0 * kPi;
  while (t < lo - 1e-12) t += two_pi;
  while (t > lo + two_pi - 1e-12) t -= two_pi;
  return t;
}

}  // namespace

double BoundaryCurve::distance(const Vec2& p) const {
  if (type == Type::line) {
    const Vec2 d = to - from;
    const double len2 = dot(d, d);
    double t = len2 > 0.0 ? dot(p - from, d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return norm(p - (from + d * t));
  }
  const Vec2 r = p - center;
  const double rad = norm(r);
  double th = std::atan2(r.y, r.x);
  th = wrap_angle(th, theta0);
  if (th <= theta1 + 1e-12) return std::abs(rad - radius);
  const Vec2 a = center + Vec2{std::cos(theta0), std::sin(theta0)} * radius;
  const Vec2 b = center + Vec2{std::cos(theta1), std::sin(theta1)} * radius;
  return std::min(norm(p - a), norm(p - b));
}

Vec2 BoundaryCurve::unit_tangent(const Vec2& p) const {
  if (type == Type::line) {
    const Vec2 d = to - from;
    return d * (1.0 / norm(d));
  }
  const Vec2 r = p - center;
  const double rad = norm(r);
  return Vec2{-r.y, r.x} * (1.0 / rad);
}

Vec2 BoundaryCurve::outward_normal(const Vec2& p) const {
  if (type == Type::line) {
    const Vec2 t = unit_tangent(p);
    return {t.y, -t.x};
  }
  const Vec2 r = p - center;
  return r * (static_cast<double>(outward) / norm(r));
}

Vec2 BoundaryCurve::slide(const Vec2& p, const Vec2& d) const {
  const Vec2 t = unit_tangent(p);
  const double s = dot(d, t);
  if (type == Type::line) return p + t * s;
  const Vec2 r = p - center;
  const double th = std::atan2(r.y, r.x) + s / radius;
  return center + Vec2{std::cos(th), std::sin(th)} * radius;
}

std::vector<Vec2> Mesh::cell_coords(int c) const {
  const Cell& cell = cells[c];
  std::vector<Vec2> xs;
  xs.reserve(cell.nodes.size());
  for (int id : cell.nodes) xs.push_back(nodes[id]);
  return xs;
}

namespace {

using SideKey = std::pair<int, int>;

SideKey side_key(const Mesh& mesh, int c, int s) {
  const auto sn = side_nodes(mesh.cells[c].kind, s);
  const int a = mesh.cells[c].nodes[sn[0]];
  const int b = mesh.cells[c].nodes[sn[1]];
  return {std::min(a, b), std::max(a, b)};
}

std::map<SideKey, int> side_use_counts(const Mesh& mesh) {
  std::map<SideKey, int> count;
  for (int c = 0; c < static_cast<int>(mesh.cells.size()); ++c) {
    for (int s = 0; s < traits(mesh.cells[c].kind).side_count; ++s) ++count[side_key(mesh, c, s)];
  }
  return count;
}

}  // namespace

void Mesh::validate() const {
  const int nn = static_cast<int>(nodes.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    if (static_cast<int>(cell.nodes.size()) != traits(cell.kind).node_count) {
      throw MeshError("cell " + std::to_string(c) + ": wrong node count for " +
                      std::string(to_string(cell.kind)));
    }
    for (int id : cell.nodes) {
      if (id < 0 || id >= nn) {
        throw MeshError("cell " + std::to_string(c) + " references missing node " +
                        std::to_string(id));
      }
    }
    const auto xs = cell_coords(static_cast<int>(c));
    for (const RefPoint& p : quadrature_rule(cell.kind).points) {
      if (!(geometry_map_unchecked(cell.kind, xs, p).detJ > 0.0)) {
        throw MeshError("cell " + std::to_string(c) + " has non-positive Jacobian");
      }
    }
  }
  const auto count = side_use_counts(*this);
  for (const BoundarySide& b : boundary) {
    if (b.cell < 0 || b.cell >= static_cast<int>(cells.size()) || b.side < 0 ||
        b.side >= traits(cells[b.cell].kind).side_count) {
      throw MeshError("boundary marker references a missing side");
    }
    if (count.at(side_key(*this, b.cell, b.side)) != 1) {
      throw MeshError("boundary marker on interior side of cell " + std::to_string(b.cell));
    }
    if (b.curve >= static_cast<int>(curves.size())) {
      throw MeshError("boundary marker references a missing curve");
    }
  }
  for (const SeamPair& s : seams) {
    if (s.a == s.b || s.a < 0 || s.b < 0 || s.a >= nn || s.b >= nn) {
      throw MeshError("invalid seam pair");
    }
    const Vec2 d = nodes[s.a] - nodes[s.b];
    if (norm(d) > 1e-12 * (1.0 + norm(nodes[s.a]))) {
      throw MeshError("seam pair nodes do not coincide");
    }
  }
}

std::vector<std::vector<int>> node_curve_sets(const Mesh& mesh) {
  std::vector<std::vector<int>> sets(mesh.nodes.size());
  for (const BoundarySide& b : mesh.boundary) {
    const Cell& cell = mesh.cells[b.cell];
    for (int local : side_nodes(cell.kind, b.side)) {
      auto& s = sets[cell.nodes[local]];
      if (std::find(s.begin(), s.end(), b.curve) == s.end()) s.push_back(b.curve);
    }
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return sets;
}

std::vector<int> boundary_nodes(const Mesh& mesh) {
  std::vector<int> out;
  const auto sets = node_curve_sets(mesh);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    if (!sets[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<BoundarySide> exterior_sides(const Mesh& mesh) {
  const auto count = side_use_counts(mesh);
  std::vector<BoundarySide> out;
  for (int c = 0; c < static_cast<int>(mesh.cells.size()); ++c) {
    for (int s = 0; s < traits(mesh.cells[c].kind).side_count; ++s) {
      if (count.at(side_key(mesh, c, s)) == 1) out.push_back({c, s, -1});
    }
  }
  return out;
}

int classify_side(const Mesh& mesh, int c, int s) {
  const Cell& cell = mesh.cells[c];
  const auto sn = side_nodes(cell.kind, s);
  const Vec2 a = mesh.nodes[cell.nodes[sn[0]]];
  const Vec2 b = mesh.nodes[cell.nodes[sn[1]]];
  const Vec2 mid = sn.size() > 2 ? mesh.nodes[cell.nodes[sn[2]]] : (a + b) * 0.5;
  const Vec2 d = b - a;
  const Vec2 out{d.y, -d.x};
  double scale = 0.0;
  for (const Vec2& p : mesh.nodes) scale = std::max(scale, norm(p));
  const double tol = 1e-9 * (1.0 + scale);
  for (int k = 0; k < static_cast<int>(mesh.curves.size()); ++k) {
    const BoundaryCurve& cv = mesh.curves[k];
    if (cv.distance(a) > tol || cv.distance(b) > tol) continue;
    // Chords of an arc (straight-sided cells) sit inside the curve.
    if (cv.type == BoundaryCurve::Type::line && cv.distance(mid) > tol) continue;
    if (dot(out, cv.outward_normal(mid)) <= 0.0) continue;
    return k;
  }
  return -1;
}

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::square: return "square";
    case Domain::circle: return "circle";
    case Domain::l_shape: return "l_shape";
    case Domain::cracked_circle: return "cracked_circle";
    case Domain::curved_l: return "curved_l";
    case Domain::inhomogeneous_l: return "inhomogeneous_l";
  }
  return "?";
}

Domain parse_domain(std::string_view name) {
  for (Domain d : {Domain::square, Domain::circle, Domain::l_shape, Domain::cracked_circle,
                   Domain::curved_l, Domain::inhomogeneous_l}) {
    if (name == to_string(d)) return d;
  }
  throw InputError("unknown domain '" + std::string(name) + "'");
}

std::string_view to_string(DielectricRegion r) {
  switch (r) {
    case DielectricRegion::corner: return "corner";
    case DielectricRegion::arm: return "arm";
    case DielectricRegion::both_arms: return "both_arms";
  }
  return "?";
}

DielectricRegion parse_dielectric_region(std::string_view name) {
  for (DielectricRegion r :
       {DielectricRegion::corner, DielectricRegion::arm, DielectricRegion::both_arms}) {
    if (name == to_string(r)) return r;
  }
  throw InputError("unknown dielectric region '" + std::string(name) + "'");
}

DomainSpec make_domain(Domain d) {
  DomainSpec s;
  s.name = d;
  if (d == Domain::inhomogeneous_l) s.materials[2] = {1.0, 5.0};
  return s;
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << mesh_to_json(mesh) << '\n';
}

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return mesh_from_json(ss.str());
}

}  // namespace maxwell
