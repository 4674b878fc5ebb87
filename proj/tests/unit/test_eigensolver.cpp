#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "maxwell/eigensolver.hpp"

using namespace maxwell;

namespace {

SystemPair edge_bc_system(Domain d, ElementKind kind, MeshSize size) {
  const Mesh mesh = generate_mesh(make_domain(d), kind, size);
  const EdgeConnectivity e = extract_edges(mesh);
  return apply_essential_bc(assemble_edge(mesh, e, {{1, {1.0, 1.0}}}), boundary_dofs(mesh, &e, Formulation::edge));
}

// Cholesky reduction of the definite pencil to a standard symmetric problem.
Eigen::VectorXd oracle_eigenvalues(const SparseMatrix& K, const SparseMatrix& M) {
  const Eigen::MatrixXd k = Eigen::MatrixXd(K), m = Eigen::MatrixXd(M);
  const Eigen::LLT<Eigen::MatrixXd> llt(m);
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::MatrixXd a = l.triangularView<Eigen::Lower>().solve(
      l.triangularView<Eigen::Lower>().solve(k).transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(0.5 * (a + a.transpose()), Eigen::EigenvaluesOnly)
      .eigenvalues();
}

SparseMatrix sparse(const Eigen::MatrixXd& a) { return a.sparseView(); }

}  // namespace

TEST_CASE("both methods agree with an independent Cholesky reduction") {
  const SystemPair s = edge_bc_system(Domain::l_shape, ElementKind::EQ12, {2, 0});
  REQUIRE(s.fdof < 500);
  const Eigen::VectorXd ref = oracle_eigenvalues(s.K, s.M);
  const double scale = ref.cwiseAbs().maxCoeff();
  for (EigenMethod method : {EigenMethod::definite, EigenMethod::qz}) {
    CAPTURE(to_string(method));
    SolveOptions o;
    o.method = method;
    const Spectrum sp = solve_generalized(s, o);
    CHECK(sp.infinite_count == 0);
    REQUIRE(static_cast<int>(sp.finite.size()) == s.fdof);
    for (int i = 0; i < s.fdof; ++i) {
      if (i >= sp.zero_count) {
        CHECK(sp.finite[i] == doctest::Approx(ref[i]).epsilon(1e-9));
      } else {
        CHECK(std::abs(ref[i]) < 1e-8 * scale);
      }
    }
    const Mesh mesh = generate_mesh(make_domain(Domain::l_shape), ElementKind::EQ12, {2, 0});
    CHECK(sp.zero_count == static_cast<int>(mesh.nodes.size() - boundary_nodes(mesh).size()));
  }
}

TEST_CASE("square cavity converges to integer eigenvalues") {
  const SystemPair s = edge_bc_system(Domain::square, ElementKind::EQ12, {6, 0});
  const std::vector<double> ev = classify_spectrum(solve_generalized(s), 6);
  const double exact[] = {1, 1, 2, 4, 4, 5};
  REQUIRE(ev.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(ev[i] == doctest::Approx(exact[i]).epsilon(2e-3));
}

TEST_CASE("eigenvectors are mass normalized and satisfy the pencil") {
  const SystemPair s = edge_bc_system(Domain::circle, ElementKind::EQ4, {3, 6});
  SolveOptions o;
  o.want_vectors = true;
  const Spectrum sp = solve_generalized(s, o);
  REQUIRE(sp.vectors.cols() == static_cast<int>(sp.finite.size()));
  const Eigen::MatrixXd K = Eigen::MatrixXd(s.K), M = Eigen::MatrixXd(s.M);
  for (int i = sp.zero_count; i < static_cast<int>(sp.finite.size()); ++i) {
    const Eigen::VectorXd v = sp.vectors.col(i);
    CHECK(v.dot(M * v) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((K * v - sp.finite[i] * (M * v)).norm() < 1e-8 * K.norm());
  }
}

TEST_CASE("zero and infinite classes") {
  // Diagonal pencil with two zeros and one infinite pair.
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(5, 5), m = Eigen::MatrixXd::Zero(5, 5);
  const double kd[] = {0, 0, 2, 3, 7}, md[] = {1, 1, 1, 0, 2};
  for (int i = 0; i < 5; ++i) {
    k(i, i) = kd[i];
    m(i, i) = md[i];
  }
  SolveOptions o;
  o.method = EigenMethod::qz;
  const Spectrum sp = solve_generalized(sparse(k), sparse(m), o);
  CHECK(sp.zero_count == 2);
  CHECK(sp.infinite_count == 1);
  REQUIRE(sp.finite.size() == 4);
  CHECK(sp.finite[2] == doctest::Approx(2.0));
  CHECK(sp.finite[3] == doctest::Approx(3.5));
  CHECK(nonzero_eigenvalues(sp) == std::vector<double>{sp.finite[2], sp.finite[3]});
  CHECK(classify_spectrum(sp, 1).size() == 1);
  CHECK(classify_spectrum(sp, 10).size() == 2);
}

TEST_CASE("solver input validation") {
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(3, 3), m = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(solve_generalized(sparse(k), sparse(Eigen::MatrixXd::Identity(4, 4))), InputError);
  Eigen::MatrixXd a = k;
  a(0, 1) = 0.5;
  CHECK_THROWS_AS(solve_generalized(sparse(a), sparse(m)), NumericalError);
  Eigen::MatrixXd neg = k;
  neg(1, 1) = -1.0;
  CHECK_THROWS_AS(solve_generalized(sparse(neg), sparse(m)), NumericalError);
  SolveOptions o;
  o.n_dense = 2;
  CHECK_THROWS_AS(solve_generalized(sparse(k), sparse(m), o), NumericalError);
  CHECK_THROWS_AS(parse_eigen_method("lanczos"), InputError);
  CHECK(parse_eigen_method("qz") == EigenMethod::qz);
}

TEST_CASE("eigenvalues do not depend on the dof ordering") {
  const SystemPair s = edge_bc_system(Domain::square, ElementKind::ET8, {2, 0});
  Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> p(s.fdof);
  p.setIdentity();
  std::mt19937 rng(3);
  std::shuffle(p.indices().data(), p.indices().data() + s.fdof, rng);
  const SparseMatrix kp = p * s.K * p.transpose(), mp = p * s.M * p.transpose();
  const Spectrum a = solve_generalized(s), b = solve_generalized(kp, mp);
  CHECK(a.zero_count == b.zero_count);
  REQUIRE(a.finite.size() == b.finite.size());
  for (std::size_t i = a.zero_count; i < a.finite.size(); ++i) CHECK(b.finite[i] == doctest::Approx(a.finite[i]).epsilon(1e-10));
}
