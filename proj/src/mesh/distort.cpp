#include <algorithm>
#include <cmath>
#include <limits>

#include "maxwell/mesh.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

double unit_double(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

int vertex_count(ElementKind k) { return traits(k).is_triangle ? 3 : 4; }

Mesh displace(const Mesh& mesh, double magnitude, std::uint64_t seed) {
  const int nn = static_cast<int>(mesh.nodes.size());
  const auto curves = node_curve_sets(mesh);

  std::vector<double> h(nn, std::numeric_limits<double>::infinity());
  std::vector<char> is_vertex(nn, 0);
  for (const Cell& c : mesh.cells) {
    const int nv = vertex_count(c.kind);
    for (int v = 0; v < nv; ++v) {
      const int a = c.nodes[v], b = c.nodes[(v + 1) % nv];
      const double len = norm(mesh.nodes[a] - mesh.nodes[b]);
      h[a] = std::min(h[a], len);
      h[b] = std::min(h[b], len);
      is_vertex[a] = 1;
    }
  }

  std::vector<Vec2> disp(nn);
  Mesh out = mesh;
  for (int i = 0; i < nn; ++i) {
    if (!is_vertex[i] || curves[i].size() >= 2) continue;
    const std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i)));
    const double angle = 2.0 * kPi * unit_double(splitmix64(base));
    const double radius = magnitude * h[i] * unit_double(splitmix64(base + 1));
    Vec2 d{radius * std::cos(angle), radius * std::sin(angle)};
    if (curves[i].size() == 1 && curves[i][0] >= 0) {
      const BoundaryCurve& cv = mesh.curves[curves[i][0]];
      out.nodes[i] = cv.slide(mesh.nodes[i], d);
      disp[i] = out.nodes[i] - mesh.nodes[i];
    } else if (curves[i].empty()) {
      out.nodes[i] = mesh.nodes[i] + d;
      disp[i] = d;
    }
  }

  for (const SeamPair& s : mesh.seams) {
    out.nodes[s.b] = out.nodes[s.a];
    disp[s.b] = disp[s.a];
  }

  // Higher-order nodes follow the mean displacement of their vertices.
  std::vector<char> done(nn, 0);
  for (const Cell& c : mesh.cells) {
    if (traits(c.kind).geometry_order < 2) continue;
    const int nv = vertex_count(c.kind);
    for (int s = 0; s < nv; ++s) {
      const auto sn = side_nodes(c.kind, s);
      const int mid = c.nodes[sn[2]];
      if (done[mid]) continue;
      done[mid] = 1;
      const Vec2 d = (disp[c.nodes[sn[0]]] + disp[c.nodes[sn[1]]]) * 0.5;
      if (curves[mid].size() == 1 && curves[mid][0] >= 0) {
        out.nodes[mid] = mesh.curves[curves[mid][0]].slide(mesh.nodes[mid], d);
      } else if (curves[mid].empty()) {
        out.nodes[mid] = mesh.nodes[mid] + d;
      }
    }
    if (!traits(c.kind).is_triangle) {
      const int center = c.nodes[8];
      if (!done[center]) {
        done[center] = 1;
        Vec2 d;
        for (int v = 0; v < 4; ++v) d += disp[c.nodes[v]];
        out.nodes[center] = mesh.nodes[center] + d * 0.25;
      }
    }
  }
  return out;
}

}  // namespace

Mesh distort_mesh(const Mesh& mesh, double magnitude, std::uint64_t seed) {
  if (!(magnitude >= 0.0 && magnitude <= 0.3)) {
    throw InputError("distortion magnitude must lie in [0, 0.3]");
  }
  if (magnitude == 0.0) return mesh;
  double mag = magnitude;
  for (int attempt = 0; attempt < 2; ++attempt, mag *= 0.5) {
    Mesh out = displace(mesh, mag, seed);
    try {
      out.validate();
      return out;
    } catch (const MeshError&) {
    }
  }
  throw MeshError("distortion inverts an element even at half magnitude");
}

}  // namespace maxwell
