#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "maxwell/edges.hpp"
#include "maxwell/mesh.hpp"

namespace maxwell {

enum class Formulation { nodal_potential, edge };

/// Essential conditions for the potential formulation.
///  tangential: A x n = 0 and phi = 0 on PEC nodes (A in a local normal /
///              tangent frame); both A components at corners.
///  full:       both A components and phi at every PEC node.
///  corners:    only the boundary corner nodes are clamped.
enum class NodalBc { tangential, full, corners };

std::string_view to_string(Formulation f);
Formulation parse_formulation(std::string_view name);
std::string_view to_string(NodalBc b);
NodalBc parse_nodal_bc(std::string_view name);

/// Formulation implied by the cell kinds (throws MeshError if mixed).
Formulation formulation_of(const Mesh& mesh);

/// Nodal potential layout: dof 3*i + c, c = 0,1 the A components along
/// frame[i][c], c = 2 the scalar potential.
inline constexpr int kNodalDofsPerNode = 3;

struct NodalFrames {
  std::vector<std::array<Vec2, 2>> axes;
};

NodalFrames nodal_frames(const Mesh& mesh, NodalBc bc);

struct DofSet {
  int total = 0;
  std::vector<int> constrained;  // sorted, unique

  int free_count() const { return total - static_cast<int>(constrained.size()); }
};

/// Edge formulation: all global edges on PEC sides. Nodal: per `bc`.
DofSet boundary_dofs(const Mesh& mesh, const EdgeConnectivity* edges, Formulation f,
                     NodalBc bc = NodalBc::tangential);

}  // namespace maxwell
