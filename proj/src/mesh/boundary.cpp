#include <algorithm>

#include "maxwell/dofs.hpp"

namespace maxwell {

std::string_view to_string(Formulation f) {
  return f == Formulation::edge ? "edge" : "nodal_potential";
}

Formulation parse_formulation(std::string_view name) {
  if (name == "edge") return Formulation::edge;
  if (name == "nodal_potential" || name == "nodal") return Formulation::nodal_potential;
  throw InputError("unknown formulation '" + std::string(name) + "'");
}

std::string_view to_string(NodalBc b) {
  switch (b) {
    case NodalBc::tangential: return "tangential";
    case NodalBc::full: return "full";
    case NodalBc::corners: return "corners";
  }
  return "?";
}

NodalBc parse_nodal_bc(std::string_view name) {
  for (NodalBc b : {NodalBc::tangential, NodalBc::full, NodalBc::corners}) {
    if (name == to_string(b)) return b;
  }
  throw InputError("unknown nodal boundary condition '" + std::string(name) + "'");
}

Formulation formulation_of(const Mesh& mesh) {
  if (mesh.cells.empty()) throw MeshError("mesh has no cells");
  const bool edge = traits(mesh.cells.front().kind).is_edge;
  for (const Cell& c : mesh.cells) {
    if (traits(c.kind).is_edge != edge) throw MeshError("mesh mixes nodal and edge cells");
  }
  return edge ? Formulation::edge : Formulation::nodal_potential;
}

NodalFrames nodal_frames(const Mesh& mesh, NodalBc bc) {
  NodalFrames f;
  f.axes.assign(mesh.nodes.size(), {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}});
  if (bc != NodalBc::tangential) return f;
  const auto sets = node_curve_sets(mesh);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() != 1 || sets[i][0] < 0) continue;
    const BoundaryCurve& cv = mesh.curves[sets[i][0]];
    const Vec2 n = cv.outward_normal(mesh.nodes[i]);
    f.axes[i] = {n, Vec2{-n.y, n.x}};
  }
  return f;
}

DofSet boundary_dofs(const Mesh& mesh, const EdgeConnectivity* edges, Formulation f,
                     NodalBc bc) {
  DofSet set;
  if (f == Formulation::edge) {
    if (edges == nullptr) throw InputError("edge formulation needs edge connectivity");
    set.total = edges->size();
    for (const BoundarySide& b : mesh.boundary) {
      const auto les = local_edges(mesh.cells[b.cell].kind);
      for (std::size_t e = 0; e < les.size(); ++e) {
        if (les[e].side == b.side) set.constrained.push_back(edges->cell_edges[b.cell][e].id);
      }
    }
  } else {
    constexpr int k = kNodalDofsPerNode;
    set.total = k * static_cast<int>(mesh.nodes.size());
    const auto sets = node_curve_sets(mesh);
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
      if (sets[i].empty()) continue;
      const bool corner = sets[i].size() >= 2 || sets[i][0] < 0;
      switch (bc) {
        case NodalBc::full:
          for (int c = 0; c < k; ++c) set.constrained.push_back(k * i + c);
          break;
        case NodalBc::tangential:
          if (corner) set.constrained.push_back(k * i);
          set.constrained.push_back(k * i + 1);
          set.constrained.push_back(k * i + 2);
          break;
        case NodalBc::corners:
          if (!corner) break;
          for (int c = 0; c < k; ++c) set.constrained.push_back(k * i + c);
          break;
      }
    }
  }
  std::sort(set.constrained.begin(), set.constrained.end());
  set.constrained.erase(std::unique(set.constrained.begin(), set.constrained.end()),
                        set.constrained.end());
  return set;
}

}  // namespace maxwell
