#pragma once

#include <Eigen/SparseCore>
#include <span>
#include <string>
#include <vector>

#include "maxwell/dofs.hpp"
#include "maxwell/edges.hpp"
#include "maxwell/mesh.hpp"
#include "maxwell/quadrature.hpp"

namespace maxwell {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;

struct DofInfo {
  enum class Kind { a_component, potential, edge };
  Kind kind = Kind::edge;
  int entity = 0;     // node id or global edge id
  int component = 0;  // frame axis for A components
};

/// Stiffness/mass pair with the meaning of every row.
struct SystemPair {
  SparseMatrix K;
  SparseMatrix M;
  std::vector<DofInfo> dof_map;
  int fdof = 0;

  bool empty() const { return fdof == 0; }
};

struct AssemblyOptions {
  int threads = 1;
  bool refined_quadrature = false;  // roughly doubled exactness
  bool fd_curls = false;            // finite-difference edge curls
};

/// Dense symmetric element matrices, row-major n x n.
struct ElementMatrices {
  int n = 0;
  std::vector<double> K;
  std::vector<double> M;
  double k(int i, int j) const { return K[static_cast<std::size_t>(i) * n + j]; }
  double m(int i, int j) const { return M[static_cast<std::size_t>(i) * n + j]; }
};

/// Element matrices of an edge cell in global edge orientation (local
/// basis functions multiplied by `signs`).
ElementMatrices edge_element_matrices(ElementKind kind, std::span<const Vec2> coords,
                                      std::span<const double> lengths,
                                      std::span<const int> signs, const MaterialRegion& mat,
                                      const QuadratureRule& rule, bool fd_curls = false);

/// Element matrices of a nodal cell in the potential formulation, local dof
/// 3a + c as in the global layout; `axes` gives the A frame of each node.
ElementMatrices nodal_element_matrices(ElementKind kind, std::span<const Vec2> coords,
                                       std::span<const std::array<Vec2, 2>> axes,
                                       const MaterialRegion& mat, const QuadratureRule& rule);

SystemPair assemble_edge(const Mesh& mesh, const EdgeConnectivity& edges,
                         const MaterialTable& materials, const AssemblyOptions& opts = {});

SystemPair assemble_nodal_potential(const Mesh& mesh, const MaterialTable& materials,
                                    const NodalFrames& frames, const AssemblyOptions& opts = {});

/// Removes the rows and columns of `constrained` dofs.
SystemPair apply_essential_bc(const SystemPair& sys, const DofSet& constrained);

/// Coordinate-format Matrix Market file (general, real).
void write_matrix_market(const SparseMatrix& a, const std::string& path);
SparseMatrix read_matrix_market(const std::string& path);

}  // namespace maxwell
