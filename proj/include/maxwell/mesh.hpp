#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "maxwell/element_kind.hpp"
#include "maxwell/types.hpp"

namespace maxwell {

struct MaterialRegion {
  double mu_r = 1.0;
  double eps_r = 1.0;
};

using MaterialTable = std::map<int, MaterialRegion>;

struct Cell {
  ElementKind kind = ElementKind::Q4;
  std::vector<int> nodes;
  int material = 1;
};

/// Analytic description of one boundary piece. Lines run with the domain on
/// their left; arcs carry the sign of the outward normal relative to the
/// radial direction.
struct BoundaryCurve {
  enum class Type { line, arc };
  Type type = Type::line;
  Vec2 from;    // line
  Vec2 to;      // line
  Vec2 center;  // arc
  double radius = 0.0;
  double theta0 = 0.0;  // arc angular range, counterclockwise
  double theta1 = 0.0;
  int outward = 1;  // arc: +1 when the outward normal points away from center

  double distance(const Vec2& p) const;
  Vec2 unit_tangent(const Vec2& p) const;
  Vec2 outward_normal(const Vec2& p) const;
  /// Move `p` (on the curve) by the tangential part of `d`, staying on the curve.
  Vec2 slide(const Vec2& p, const Vec2& d) const;
};

/// A PEC-tagged element side.
struct BoundarySide {
  int cell = 0;
  int side = 0;
  int curve = -1;  // index into Mesh::curves, -1 if unknown
};

struct SeamPair {
  int a = 0;
  int b = 0;
};

struct Mesh {
  std::vector<Vec2> nodes;
  std::vector<Cell> cells;
  std::vector<BoundarySide> boundary;
  std::vector<SeamPair> seams;
  std::vector<BoundaryCurve> curves;

  std::vector<Vec2> cell_coords(int c) const;

  /// Checks node references, positive Jacobians at quadrature points,
  /// exterior boundary sides and seam coincidence. Throws MeshError.
  void validate() const;
};

enum class Domain { square, circle, l_shape, cracked_circle, curved_l, inhomogeneous_l };

std::string_view to_string(Domain d);
Domain parse_domain(std::string_view name);

/// Which square of the L carries the second material in the inhomogeneous case.
/// `corner` is the square touching the reentrant corner diagonally
/// ([0,pi/2]^2); `arm` is [pi/2,pi] x [0,pi/2]; `both_arms` is everything
/// except the corner square.
enum class DielectricRegion { corner, arm, both_arms };

std::string_view to_string(DielectricRegion r);
DielectricRegion parse_dielectric_region(std::string_view name);

struct DomainSpec {
  Domain name = Domain::square;
  double side = kPi;                      // square / L
  double radius = 1.0;                    // circles
  double radii[3] = {1.0, 2.0, 3.0};      // curved L
  double sector = kPi / 8.0;              // curved L angular width of each part
  DielectricRegion dielectric = DielectricRegion::both_arms;
  MaterialTable materials{{1, {1.0, 1.0}}};
};

DomainSpec make_domain(Domain d);

/// Mesh resolution. For square: n x m cells (m defaults to n). L shapes: n
/// cells per quadrant side. Circles: n radial rings, m sectors (default n).
/// Curved L: n radial cells per unit radius, m angular cells per sector.
struct MeshSize {
  int n = 1;
  int m = 0;
  int m_or_n() const { return m > 0 ? m : n; }
};

/// Builds a structured mesh of `spec` with cells of `kind`. Quad kinds on
/// circles produce a triangle fan around the center (mixed mesh); triangle
/// kinds split each quad along its lower-left/upper-right diagonal.
Mesh generate_mesh(const DomainSpec& spec, ElementKind kind, MeshSize size);

/// Deterministic node perturbation: interior vertices move by at most
/// magnitude * (shortest incident edge), boundary vertices slide along their
/// curve, corner vertices stay. Higher-order nodes follow their vertices.
/// Halves the magnitude once if an element inverts; throws MeshError if it
/// still does.
Mesh distort_mesh(const Mesh& mesh, double magnitude, std::uint64_t seed);

/// Counter-based splitmix64 hash used for reproducible perturbations.
std::uint64_t splitmix64(std::uint64_t x);

std::string mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(std::string_view text);
void write_mesh(const Mesh& mesh, const std::string& path);
Mesh read_mesh(const std::string& path);

/// Ids of nodes that lie on PEC sides, sorted.
std::vector<int> boundary_nodes(const Mesh& mesh);

/// For each node, the sorted curve ids of the PEC sides touching it. Nodes
/// with two or more entries are boundary corners.
std::vector<std::vector<int>> node_curve_sets(const Mesh& mesh);

/// Sides used by exactly one cell (curve left at -1).
std::vector<BoundarySide> exterior_sides(const Mesh& mesh);

/// Curve carrying side `s` of cell `c`, matched by position and outward
/// normal; -1 if none fits.
int classify_side(const Mesh& mesh, int c, int s);

}  // namespace maxwell
