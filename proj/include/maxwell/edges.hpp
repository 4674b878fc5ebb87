#pragma once

#include <span>
#include <utility>
#include <vector>

#include "maxwell/mesh.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

struct EdgeRef {
  int id = 0;
  int sign = 1;
};

/// Global edge numbering for edge-element meshes. Shared edges are keyed by
/// their endpoint node ids; cell-private interior edges get their own id.
struct EdgeConnectivity {
  std::vector<std::pair<int, int>> global_edges;  // (low node id, high node id)
  std::vector<char> is_private;
  std::vector<std::vector<EdgeRef>> cell_edges;     // per cell, per local edge
  std::vector<std::vector<double>> edge_lengths;    // per cell, per local edge

  int size() const { return static_cast<int>(global_edges.size()); }
};

/// Length of the mapped reference segment between two reference points,
/// sampled along the isoparametric map.
double mapped_length(ElementKind kind, std::span<const Vec2> coords, RefPoint a, RefPoint b);

/// Throws MeshError for nodal cells, mixed geometry orders or hanging nodes.
EdgeConnectivity extract_edges(const Mesh& mesh);

}  // namespace maxwell
