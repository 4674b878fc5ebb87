#include "maxwell/edges.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "maxwell/quadrature.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

double mapped_length(ElementKind kind, std::span<const Vec2> coords, RefPoint a, RefPoint b) {
  static const QuadratureRule g = gauss_legendre(8);
  const double dxi = b.xi - a.xi, deta = b.eta - a.eta;
  double len = 0.0;
  for (std::size_t q = 0; q < g.points.size(); ++q) {
    const double s = 0.5 * (g.points[q].xi + 1.0);
    const RefPoint p{a.xi + s * dxi, a.eta + s * deta};
    const GeometryMap m = geometry_map_unchecked(kind, coords, p);
    const Vec2 t{dxi * m.J[0][0] + deta * m.J[1][0], dxi * m.J[0][1] + deta * m.J[1][1]};
    len += 0.5 * g.weights[q] * norm(t);
  }
  return len;
}

namespace {

void check_conforming(const Mesh& mesh) {
  // Exterior sides that are not PEC-marked must not contain another side's
  // corner in their interior (hanging node).
  std::set<std::pair<int, int>> marked;
  for (const BoundarySide& b : mesh.boundary) marked.insert({b.cell, b.side});
  std::vector<std::pair<int, int>> loose;
  for (const BoundarySide& s : exterior_sides(mesh)) {
    if (!marked.count({s.cell, s.side})) loose.push_back({s.cell, s.side});
  }
  if (loose.empty()) return;
  std::vector<int> corners;
  for (auto [c, s] : loose) {
    const auto sn = side_nodes(mesh.cells[c].kind, s);
    corners.push_back(mesh.cells[c].nodes[sn[0]]);
    corners.push_back(mesh.cells[c].nodes[sn[1]]);
  }
  for (auto [c, s] : loose) {
    const auto sn = side_nodes(mesh.cells[c].kind, s);
    const Vec2 a = mesh.nodes[mesh.cells[c].nodes[sn[0]]];
    const Vec2 b = mesh.nodes[mesh.cells[c].nodes[sn[1]]];
    const Vec2 d = b - a;
    const double len = norm(d);
    for (int id : corners) {
      const Vec2 r = mesh.nodes[id] - a;
      const double t = dot(r, d) / (len * len);
      if (t > 1e-9 && t < 1.0 - 1e-9 && std::abs(cross(d, r)) < 1e-9 * len * len) {
        throw MeshError("non-conforming mesh: hanging node " + std::to_string(id));
      }
    }
  }
}

}  // namespace

EdgeConnectivity extract_edges(const Mesh& mesh) {
  EdgeConnectivity ec;
  const int nc = static_cast<int>(mesh.cells.size());
  ec.cell_edges.resize(nc);
  ec.edge_lengths.resize(nc);
  int order = 0;
  for (const Cell& c : mesh.cells) {
    if (!traits(c.kind).is_edge) throw MeshError("edge numbering requested for a nodal cell");
    const int o = traits(c.kind).geometry_order;
    if (order != 0 && o != order) throw MeshError("non-conforming mesh: mixed edge element orders");
    order = o;
  }
  check_conforming(mesh);

  std::map<std::pair<int, int>, int> shared;
  std::vector<int> use_count;
  std::vector<double> cached_length;
  for (int c = 0; c < nc; ++c) {
    const Cell& cell = mesh.cells[c];
    const auto xs = mesh.cell_coords(c);
    for (const LocalEdge& le : local_edges(cell.kind)) {
      const int gf = cell.nodes[le.from], gt = cell.nodes[le.to];
      const RefPoint ra = reference_node(cell.kind, le.from);
      const RefPoint rb = reference_node(cell.kind, le.to);
      if (le.side < 0) {
        const int id = ec.size();
        ec.global_edges.push_back({std::min(gf, gt), std::max(gf, gt)});
        ec.is_private.push_back(1);
        use_count.push_back(1);
        cached_length.push_back(mapped_length(cell.kind, xs, ra, rb));
        ec.cell_edges[c].push_back({id, 1});
        ec.edge_lengths[c].push_back(cached_length[id]);
        continue;
      }
      const std::pair<int, int> key{std::min(gf, gt), std::max(gf, gt)};
      auto [it, inserted] = shared.emplace(key, ec.size());
      const int id = it->second;
      if (inserted) {
        ec.global_edges.push_back(key);
        ec.is_private.push_back(0);
        use_count.push_back(0);
        cached_length.push_back(mapped_length(cell.kind, xs, ra, rb));
      }
      if (++use_count[id] > 2) throw MeshError("non-conforming mesh: edge shared by >2 cells");
      ec.cell_edges[c].push_back({id, gf < gt ? 1 : -1});
      ec.edge_lengths[c].push_back(cached_length[id]);
    }
  }
  return ec;
}

}  // namespace maxwell
