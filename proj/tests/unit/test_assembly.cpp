#include <doctest.h>

#include <Eigen/SparseCholesky>
#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "maxwell/eigensolver.hpp"
#include "maxwell/kernels.hpp"

using namespace maxwell;
using testutil::dense;

namespace {

struct EdgeCase {
  Domain domain;
  ElementKind kind;
  MeshSize size;
};

SystemPair edge_system(const Mesh& mesh, const AssemblyOptions& opts = {}) {
  const EdgeConnectivity e = extract_edges(mesh);
  return assemble_edge(mesh, e, {{1, {1.0, 1.0}}}, opts);
}

double rel_asymmetry(const SparseMatrix& a) {
  const SparseMatrix d = a - SparseMatrix(a.transpose());
  return d.norm() / a.norm();
}

// Load vector of a constant field against the signed edge basis.
Eigen::VectorXd constant_field_load(const Mesh& mesh, const EdgeConnectivity& e, Vec2 f) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(e.size());
  for (int c = 0; c < static_cast<int>(mesh.cells.size()); ++c) {
    const ElementKind k = mesh.cells[c].kind;
    const auto xs = mesh.cell_coords(c);
    const QuadratureRule r = quadrature_rule(k);
    for (std::size_t q = 0; q < r.points.size(); ++q) {
      const GeometryMap g = geometry_map(k, xs, r.points[q]);
      const EdgeShapeEval s = eval_edge_shape(k, r.points[q], g, e.edge_lengths[c]);
      for (int i = 0; i < s.count; ++i) {
        const EdgeRef ref = e.cell_edges[c][i];
        b[ref.id] += r.weights[q] * g.detJ * ref.sign * dot(s.values[i], f);
      }
    }
  }
  return b;
}

}  // namespace

TEST_CASE("assembled matrices are symmetric") {
  const EdgeCase cases[] = {{Domain::square, ElementKind::EQ12, {3, 0}},
                            {Domain::circle, ElementKind::EQ12, {3, 5}},
                            {Domain::curved_l, ElementKind::ET8, {1, 2}},
                            {Domain::l_shape, ElementKind::EQ4, {3, 0}}};
  for (const EdgeCase& c : cases) {
    const SystemPair s = edge_system(distort_mesh(generate_mesh(make_domain(c.domain), c.kind, c.size), 0.2, 3));
    CHECK(rel_asymmetry(s.K) < 1e-12);
    CHECK(rel_asymmetry(s.M) < 1e-12);
  }
  const Mesh m = generate_mesh(make_domain(Domain::circle), ElementKind::Q9, {3, 5});
  const SystemPair n = assemble_nodal_potential(m, {{1, {1.0, 1.0}}}, nodal_frames(m, NodalBc::tangential));
  CHECK(rel_asymmetry(n.K) < 1e-12);
  CHECK(rel_asymmetry(n.M) < 1e-12);
}

TEST_CASE("edge curl-curl null space equals the interior node count") {
  const EdgeCase cases[] = {{Domain::square, ElementKind::EQ4, {4, 0}},
                            {Domain::square, ElementKind::EQ12, {3, 0}},
                            {Domain::square, ElementKind::ET8, {2, 3}},
                            {Domain::square, ElementKind::ET3, {4, 3}},
                            {Domain::l_shape, ElementKind::ET8, {1, 0}},
                            {Domain::circle, ElementKind::EQ4, {3, 6}},
                            {Domain::cracked_circle, ElementKind::EQ12, {2, 4}},
                            {Domain::curved_l, ElementKind::EQ12, {1, 1}}};
  for (const EdgeCase& c : cases) {
    CAPTURE(to_string(c.domain));
    CAPTURE(to_string(c.kind));
    const Mesh mesh = generate_mesh(make_domain(c.domain), c.kind, c.size);
    const EdgeConnectivity e = extract_edges(mesh);
    const SystemPair s =
        apply_essential_bc(assemble_edge(mesh, e, {{1, {1.0, 1.0}}}), boundary_dofs(mesh, &e, Formulation::edge));
    REQUIRE(s.fdof <= 200);
    const Eigen::MatrixXd K = dense(s.K), M = dense(s.M);
    const int interior = static_cast<int>(mesh.nodes.size() - boundary_nodes(mesh).size());
    CHECK(s.fdof - testutil::numeric_rank(K) == interior);
    CHECK(testutil::numeric_rank(M) == s.fdof);
  }
}

TEST_CASE("constant fields are reproduced and carry no curl") {
  const EdgeCase cases[] = {{Domain::square, ElementKind::EQ4, {3, 2}},
                            {Domain::square, ElementKind::ET3, {3, 3}},
                            {Domain::square, ElementKind::EQ12, {2, 3}},
                            {Domain::l_shape, ElementKind::ET8, {2, 0}}};
  const Vec2 f{0.7, -1.3};
  for (const EdgeCase& c : cases) {
    CAPTURE(to_string(c.kind));
    // Distorted straight-sided cells: triangles stay affine, quads become general.
    Mesh mesh = generate_mesh(make_domain(c.domain), c.kind, c.size);
    if (traits(c.kind).geometry_order == 1) mesh = distort_mesh(mesh, 0.25, 11);
    const EdgeConnectivity e = extract_edges(mesh);
    const SystemPair s = assemble_edge(mesh, e, {{1, {1.0, 1.0}}});
    const Eigen::VectorXd b = constant_field_load(mesh, e, f);
    Eigen::SimplicialLDLT<SparseMatrix> ldlt(s.M);
    REQUIRE(ldlt.info() == Eigen::Success);
    const Eigen::VectorXd x = ldlt.solve(b);
    const double area = c.domain == Domain::square ? kPi * kPi : 0.75 * kPi * kPi;
    CHECK(x.dot(s.M * x) == doctest::Approx(dot(f, f) * area).epsilon(1e-10));
    CHECK((s.K * x).norm() < 1e-10 * s.K.norm() * x.norm());
  }
}

TEST_CASE("nodal potential stiffness annihilates constant A and any phi") {
  Mesh mesh = distort_mesh(generate_mesh(make_domain(Domain::l_shape), ElementKind::Q9, {2, 0}), 0.2, 5);
  const SystemPair s = assemble_nodal_potential(mesh, {{1, {1.0, 1.0}}}, nodal_frames(mesh, NodalBc::corners));
  Eigen::VectorXd x(s.K.rows());
  for (int i = 0; i < static_cast<int>(mesh.nodes.size()); ++i) {
    x[3 * i] = 0.4;
    x[3 * i + 1] = -2.0;
    x[3 * i + 2] = std::sin(1.0 + i);
  }
  CHECK((s.K * x).norm() < 1e-12 * s.K.norm() * x.norm());
  // A = (y, 0) has curl -1.
  for (int i = 0; i < static_cast<int>(mesh.nodes.size()); ++i) {
    x[3 * i] = mesh.nodes[i].y;
    x[3 * i + 1] = 0.0;
    x[3 * i + 2] = 0.0;
  }
  CHECK(x.dot(s.K * x) == doctest::Approx(0.75 * kPi * kPi).epsilon(1e-10));
}

TEST_CASE("materials scale the element contributions") {
  const Mesh mesh = generate_mesh(make_domain(Domain::square), ElementKind::EQ4, {3, 0});
  const EdgeConnectivity e = extract_edges(mesh);
  const SystemPair a = assemble_edge(mesh, e, {{1, {1.0, 1.0}}});
  const SystemPair b = assemble_edge(mesh, e, {{1, {2.0, 5.0}}});
  CHECK((b.K * 2.0 - a.K).norm() < 1e-12 * a.K.norm());
  CHECK((b.M - a.M * 5.0).norm() < 1e-12 * b.M.norm());
  CHECK_THROWS_AS(assemble_edge(mesh, e, {{2, {1.0, 1.0}}}), InputError);
  CHECK_THROWS_AS(assemble_edge(mesh, e, {{1, {0.0, 1.0}}}), InputError);
}

TEST_CASE("threaded assembly matches sequential assembly exactly") {
  const Mesh mesh = generate_mesh(make_domain(Domain::circle), ElementKind::EQ12, {4, 6});
  const SystemPair a = edge_system(mesh, {.threads = 1});
  const SystemPair b = edge_system(mesh, {.threads = 4});
  CHECK(dense(a.K) == dense(b.K));
  CHECK(dense(a.M) == dense(b.M));
}

TEST_CASE("AVX2 and scalar kernels assemble the same system") {
  if (!kernels::avx2_available()) return;
  const Mesh mesh = generate_mesh(make_domain(Domain::curved_l), ElementKind::EQ12, {1, 2});
  kernels::set_backend(kernels::Backend::scalar);
  const SystemPair a = edge_system(mesh);
  kernels::set_backend(kernels::Backend::avx2);
  const SystemPair b = edge_system(mesh);
  kernels::set_backend(kernels::Backend::scalar);
  CHECK((a.K - b.K).norm() <= 1e-13 * a.K.norm());
  CHECK((a.M - b.M).norm() <= 1e-13 * a.M.norm());
}

TEST_CASE("refined quadrature and finite-difference curls agree with the defaults") {
  // Affine cells are integrated exactly by both rules; curved cells only approximately.
  const Mesh flat = generate_mesh(make_domain(Domain::l_shape), ElementKind::ET8, {2, 0});
  CHECK((edge_system(flat).K - edge_system(flat, {.refined_quadrature = true}).K).norm() <
        1e-12 * edge_system(flat).K.norm());
  const Mesh mesh = generate_mesh(make_domain(Domain::circle), ElementKind::EQ12, {4, 8});
  const SystemPair a = edge_system(mesh);
  const SystemPair r = edge_system(mesh, {.refined_quadrature = true});
  const SystemPair f = edge_system(mesh, {.fd_curls = true});
  const EdgeConnectivity e = extract_edges(mesh);
  const DofSet bc = boundary_dofs(mesh, &e, Formulation::edge);
  const auto la = classify_spectrum(solve_generalized(apply_essential_bc(a, bc)), 4);
  const auto lr = classify_spectrum(solve_generalized(apply_essential_bc(r, bc)), 4);
  REQUIRE(la.size() == lr.size());
  for (std::size_t i = 0; i < la.size(); ++i) CHECK(lr[i] == doctest::Approx(la[i]).epsilon(1e-4));
  CHECK((a.K - f.K).norm() < 1e-6 * a.K.norm());
}

TEST_CASE("essential conditions remove rows and columns") {
  const Mesh mesh = generate_mesh(make_domain(Domain::square), ElementKind::EQ4, {3, 0});
  const EdgeConnectivity e = extract_edges(mesh);
  const SystemPair full = assemble_edge(mesh, e, {{1, {1.0, 1.0}}});
  const DofSet bc = boundary_dofs(mesh, &e, Formulation::edge);
  const SystemPair s = apply_essential_bc(full, bc);
  CHECK(s.fdof == 24 - 12);
  CHECK(s.K.rows() == s.fdof);
  CHECK(s.M.cols() == s.fdof);
  CHECK(s.dof_map.size() == static_cast<std::size_t>(s.fdof));
  for (const DofInfo& d : s.dof_map) CHECK(!std::binary_search(bc.constrained.begin(), bc.constrained.end(), d.entity));
  CHECK_THROWS_AS(apply_essential_bc(full, DofSet{24, {30}}), InputError);
}

TEST_CASE("matrix market round trip") {
  const Mesh mesh = generate_mesh(make_domain(Domain::square), ElementKind::ET8, {2, 0});
  const SystemPair s = edge_system(mesh);
  const auto path = (std::filesystem::temp_directory_path() / "maxwell_test_K.mtx").string();
  write_matrix_market(s.K, path);
  const SparseMatrix r = read_matrix_market(path);
  std::filesystem::remove(path);
  REQUIRE(r.rows() == s.K.rows());
  CHECK((r - s.K).norm() <= 1e-15 * s.K.norm());
  CHECK_THROWS_AS(read_matrix_market("/nonexistent.mtx"), InputError);
}
