#pragma once

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "maxwell/assembly.hpp"

namespace maxwell {

/// definite: the pencil is rewritten as K x = theta (K + sM) x with a
///           positive definite right-hand side and solved by a symmetric
///           divide-and-conquer generalized solver; (alpha, beta) are
///           recovered from Rayleigh quotients of the eigenvectors.
/// qz:       dense generalized Schur (QZ) on (K, M) directly.
/// Both return every eigenvalue of the pencil.
enum class EigenMethod { definite, qz };

std::string_view to_string(EigenMethod m);
EigenMethod parse_eigen_method(std::string_view name);

/// Eigenvalues with |lambda| <= zero_rel_tol * max|K| / max|M| form the zero
/// class; pairs with |beta| <= inf_rel_tol * max|beta| are infinite.
struct SolveOptions {
  double zero_rel_tol = 1e-8;
  double inf_rel_tol = 1e-12;
  bool want_vectors = false;
  int k_max = 0;  // with want_vectors: keep vectors of zeros + first k_max nonzero (0 = all)
  EigenMethod method = EigenMethod::definite;
  int n_dense = 5000;
  double symmetry_tol = 1e-10;
};

struct Spectrum {
  std::vector<double> finite;  // ascending, zeros first
  int zero_count = 0;
  int infinite_count = 0;
  Eigen::MatrixXd vectors;     // column i belongs to finite[i] (when requested)
  double zero_threshold = 0.0; // absolute threshold applied to |lambda|
  SolveOptions options;
};

Spectrum solve_generalized(const SparseMatrix& K, const SparseMatrix& M,
                           const SolveOptions& opts = {});
inline Spectrum solve_generalized(const SystemPair& sys, const SolveOptions& opts = {}) {
  return solve_generalized(sys.K, sys.M, opts);
}

/// First k eigenvalues above the zero class, ascending, repeated by multiplicity.
std::vector<double> classify_spectrum(const Spectrum& spec, int k);

/// All nonzero finite eigenvalues.
std::vector<double> nonzero_eigenvalues(const Spectrum& spec);

}  // namespace maxwell
