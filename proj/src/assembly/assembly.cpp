#include "maxwell/assembly.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "maxwell/kernels.hpp"
#include "maxwell/shape.hpp"

namespace maxwell {

ElementMatrices edge_element_matrices(ElementKind kind, std::span<const Vec2> coords,
                                      std::span<const double> lengths,
                                      std::span<const int> signs, const MaterialRegion& mat,
                                      const QuadratureRule& rule, bool fd_curls) {
  const ElementKind gk = geometry_kind(kind);
  const int n = traits(kind).edge_count;
  ElementMatrices em;
  em.n = n;
  em.K.assign(static_cast<std::size_t>(n) * n, 0.0);
  em.M.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::array<double, kMaxEdges> curl{}, vx{}, vy{};
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const RefPoint p = rule.points[q];
    const GeometryMap geo = geometry_map(gk, coords, p);
    const EdgeShapeEval e = fd_curls ? eval_edge_shape_fd(kind, coords, p, lengths)
                                     : eval_edge_shape(kind, p, geo, lengths);
    for (int i = 0; i < n; ++i) {
      const double s = signs[i];
      curl[i] = s * e.curls[i];
      vx[i] = s * e.values[i].x;
      vy[i] = s * e.values[i].y;
    }
    const double w = rule.weights[q] * geo.detJ;
    kernels::rank1_upper(em.K.data(), n, n, w / mat.mu_r, curl.data());
    kernels::rank1_upper(em.M.data(), n, n, w * mat.eps_r, vx.data());
    kernels::rank1_upper(em.M.data(), n, n, w * mat.eps_r, vy.data());
  }
  kernels::symmetrize_upper(em.K.data(), n, n);
  kernels::symmetrize_upper(em.M.data(), n, n);
  return em;
}

ElementMatrices nodal_element_matrices(ElementKind kind, std::span<const Vec2> coords,
                                       std::span<const std::array<Vec2, 2>> axes,
                                       const MaterialRegion& mat, const QuadratureRule& rule) {
  constexpr int kd = kNodalDofsPerNode;
  const int nn = traits(kind).node_count;
  const int n = kd * nn;
  ElementMatrices em;
  em.n = n;
  em.K.assign(static_cast<std::size_t>(n) * n, 0.0);
  em.M.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::array<double, kd * kMaxNodes> curl{}, div{}, ex{}, ey{};
  for (std::size_t q = 0; q < rule.points.size(); ++q) {
    const RefPoint p = rule.points[q];
    const GeometryMap geo = geometry_map(kind, coords, p);
    const NodalShapeEval s = eval_nodal_shape(kind, p);
    for (int a = 0; a < nn; ++a) {
      const Vec2 g = geo.physical_gradient(s.d_dxi[a], s.d_deta[a]);
      const double N = s.values[a];
      for (int c = 0; c < 2; ++c) {
        const Vec2 u = axes[a][c];
        const int i = kd * a + c;
        curl[i] = u.y * g.x - u.x * g.y;
        div[i] = dot(u, g);
        ex[i] = u.x * N;
        ey[i] = u.y * N;
      }
      const int i = kd * a + 2;
      curl[i] = 0.0;
      div[i] = 0.0;
      ex[i] = g.x;
      ey[i] = g.y;
    }
    const double w = rule.weights[q] * geo.detJ;
    kernels::rank1_upper(em.K.data(), n, n, w / mat.mu_r, curl.data());
    kernels::rank1_upper(em.K.data(), n, n, w / mat.mu_r, div.data());
    kernels::rank1_upper(em.M.data(), n, n, w * mat.eps_r, ex.data());
    kernels::rank1_upper(em.M.data(), n, n, w * mat.eps_r, ey.data());
  }
  kernels::symmetrize_upper(em.K.data(), n, n);
  kernels::symmetrize_upper(em.M.data(), n, n);
  return em;
}

namespace {

const MaterialRegion& material_of(const MaterialTable& materials, int id) {
  auto it = materials.find(id);
  if (it == materials.end()) throw InputError("unknown material id " + std::to_string(id));
  if (!(it->second.mu_r > 0.0 && it->second.eps_r > 0.0)) {
    throw InputError("material " + std::to_string(id) + " must have positive mu_r and eps_r");
  }
  return it->second;
}

// Element matrices are computed in parallel into per-cell slots; the scatter
// walks cells in order so the result does not depend on the thread count.
template <class ElementFn, class DofFn>
SystemPair assemble(int cells, int ndof, int threads, ElementFn element, DofFn dofs) {
  std::vector<ElementMatrices> local(cells);
  std::vector<std::exception_ptr> errors(std::max(threads, 1));
  auto work = [&](int t, int nt) {
    try {
      for (int c = t; c < cells; c += nt) local[c] = element(c);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  const int nt = std::clamp(threads, 1, std::max(cells, 1));
  if (nt == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Eigen::Triplet<double>> kt, mt;
  for (int c = 0; c < cells; ++c) {
    const ElementMatrices& em = local[c];
    const std::vector<int> g = dofs(c);
    for (int i = 0; i < em.n; ++i) {
      for (int j = 0; j < em.n; ++j) {
        const double kv = em.k(i, j), mv = em.m(i, j);
        if (kv != 0.0) kt.emplace_back(g[i], g[j], kv);
        if (mv != 0.0) mt.emplace_back(g[i], g[j], mv);
      }
    }
    local[c] = {};
  }
  SystemPair sys;
  sys.K.resize(ndof, ndof);
  sys.M.resize(ndof, ndof);
  sys.K.setFromTriplets(kt.begin(), kt.end());
  sys.M.setFromTriplets(mt.begin(), mt.end());
  sys.K.makeCompressed();
  sys.M.makeCompressed();
  sys.fdof = ndof;
  return sys;
}

}  // namespace

SystemPair assemble_edge(const Mesh& mesh, const EdgeConnectivity& edges,
                         const MaterialTable& materials, const AssemblyOptions& opts) {
  const int nc = static_cast<int>(mesh.cells.size());
  for (const Cell& c : mesh.cells) {
    if (!traits(c.kind).is_edge) throw InputError("edge assembly needs edge-element cells");
    material_of(materials, c.material);
  }
  auto element = [&](int c) {
    const Cell& cell = mesh.cells[c];
    const auto xs = mesh.cell_coords(c);
    std::array<int, kMaxEdges> signs{};
    for (std::size_t e = 0; e < edges.cell_edges[c].size(); ++e) signs[e] = edges.cell_edges[c][e].sign;
    const QuadratureRule rule =
        opts.refined_quadrature ? refined_rule(cell.kind) : quadrature_rule(cell.kind);
    return edge_element_matrices(cell.kind, xs, edges.edge_lengths[c],
                                 std::span<const int>(signs.data(), edges.cell_edges[c].size()),
                                 material_of(materials, cell.material), rule, opts.fd_curls);
  };
  auto dofs = [&](int c) {
    std::vector<int> g;
    for (const EdgeRef& r : edges.cell_edges[c]) g.push_back(r.id);
    return g;
  };
  SystemPair sys = assemble(nc, edges.size(), opts.threads, element, dofs);
  sys.dof_map.resize(edges.size());
  for (int e = 0; e < edges.size(); ++e) sys.dof_map[e] = {DofInfo::Kind::edge, e, 0};
  return sys;
}

SystemPair assemble_nodal_potential(const Mesh& mesh, const MaterialTable& materials,
                                    const NodalFrames& frames, const AssemblyOptions& opts) {
  constexpr int kd = kNodalDofsPerNode;
  const int nc = static_cast<int>(mesh.cells.size());
  for (const Cell& c : mesh.cells) {
    if (traits(c.kind).is_edge) throw InputError("nodal assembly needs nodal cells");
    material_of(materials, c.material);
  }
  auto element = [&](int c) {
    const Cell& cell = mesh.cells[c];
    const auto xs = mesh.cell_coords(c);
    std::array<std::array<Vec2, 2>, kMaxNodes> axes{};
    for (std::size_t a = 0; a < cell.nodes.size(); ++a) axes[a] = frames.axes[cell.nodes[a]];
    const QuadratureRule rule =
        opts.refined_quadrature ? refined_rule(cell.kind) : quadrature_rule(cell.kind);
    return nodal_element_matrices(
        cell.kind, xs, std::span<const std::array<Vec2, 2>>(axes.data(), cell.nodes.size()),
        material_of(materials, cell.material), rule);
  };
  auto dofs = [&](int c) {
    std::vector<int> g;
    for (int node : mesh.cells[c].nodes) {
      for (int k = 0; k < kd; ++k) g.push_back(kd * node + k);
    }
    return g;
  };
  const int ndof = kd * static_cast<int>(mesh.nodes.size());
  SystemPair sys = assemble(nc, ndof, opts.threads, element, dofs);
  sys.dof_map.resize(ndof);
  for (int i = 0; i < ndof; ++i) {
    const int c = i % kd;
    sys.dof_map[i] = {c == 2 ? DofInfo::Kind::potential : DofInfo::Kind::a_component, i / kd,
                      c == 2 ? 0 : c};
  }
  return sys;
}

SystemPair apply_essential_bc(const SystemPair& sys, const DofSet& constrained) {
  const int n = static_cast<int>(sys.K.rows());
  std::vector<int> map(n, 0);
  for (int d : constrained.constrained) {
    if (d < 0 || d >= n) throw InputError("constrained dof out of range");
    map[d] = -1;
  }
  SystemPair out;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0) continue;
    map[i] = next++;
    out.dof_map.push_back(sys.dof_map[i]);
  }
  auto reduce = [&](const SparseMatrix& a) {
    std::vector<Eigen::Triplet<double>> t;
    for (int col = 0; col < a.outerSize(); ++col) {
      if (map[col] < 0) continue;
      for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
        if (map[it.row()] >= 0) t.emplace_back(map[it.row()], map[col], it.value());
      }
    }
    SparseMatrix r(next, next);
    r.setFromTriplets(t.begin(), t.end());
    r.makeCompressed();
    return r;
  };
  out.K = reduce(sys.K);
  out.M = reduce(sys.M);
  out.fdof = next;
  return out;
}

void write_matrix_market(const SparseMatrix& a, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw InputError("cannot write " + path);
  std::fprintf(f, "%%%%MatrixMarket matrix coordinate real general\n");
  std::fprintf(f, "%ld %ld %ld\n", static_cast<long>(a.rows()), static_cast<long>(a.cols()),
               static_cast<long>(a.nonZeros()));
  for (int col = 0; col < a.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
      std::fprintf(f, "%ld %d %.17g\n", static_cast<long>(it.row()) + 1, col + 1, it.value());
    }
  }
  std::fclose(f);
}

SparseMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("%%MatrixMarket matrix coordinate real", 0) != 0) {
    throw InputError(path + ": not a coordinate real Matrix Market file");
  }
  const bool symmetric = line.find("symmetric") != std::string::npos;
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
  }
  std::istringstream head(line);
  long rows = 0, cols = 0, nnz = 0;
  if (!(head >> rows >> cols >> nnz)) throw InputError(path + ": bad size line");
  std::vector<Eigen::Triplet<double>> t;
  for (long k = 0; k < nnz; ++k) {
    long i = 0, j = 0;
    double v = 0.0;
    if (!(in >> i >> j >> v)) throw InputError(path + ": truncated entries");
    t.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1), v);
    if (symmetric && i != j) t.emplace_back(static_cast<int>(j - 1), static_cast<int>(i - 1), v);
  }
  SparseMatrix a(rows, cols);
  a.setFromTriplets(t.begin(), t.end());
  a.makeCompressed();
  return a;
}

}  // namespace maxwell
