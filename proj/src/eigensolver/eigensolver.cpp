#include "maxwell/eigensolver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxwell {

std::string_view to_string(EigenMethod m) { return m == EigenMethod::qz ? "qz" : "definite"; }

EigenMethod parse_eigen_method(std::string_view name) {
  if (name == "qz") return EigenMethod::qz;
  if (name == "definite") return EigenMethod::definite;
  throw InputError("unknown eigen method '" + std::string(name) + "'");
}

namespace {

struct Pair {
  double alpha;
  double beta;
  int column;
};

double max_abs(const Eigen::MatrixXd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

double pencil_scale(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M) {
  const double mm = max_abs(M);
  return mm > 0.0 ? max_abs(K) / mm : 0.0;
}

void check_symmetric(const Eigen::MatrixXd& a, double tol, const char* name) {
  const double scale = max_abs(a);
  if (scale == 0.0) return;
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw NumericalError(std::string(name) + " is not symmetric (relative asymmetry " +
                         std::to_string(asym / scale) + ")");
  }
}

// K x = theta (K + sM) x; theta in [0, 1] for semidefinite K, M. The
// homogeneous pair is taken from Rayleigh quotients, which keeps beta
// accurate for directions where M nearly vanishes.
bool solve_definite(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M, std::vector<Pair>& pairs,
                    Eigen::MatrixXd& vecs) {
  const int n = static_cast<int>(K.rows());
  const double km = max_abs(K), mm = max_abs(M);
  const double s = km > 0.0 ? km / mm : 1.0;
  Eigen::MatrixXd A = K;
  Eigen::MatrixXd B = K + s * M;
  Eigen::VectorXd w(n);
  const lapack_int info = LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'V', 'U', n, A.data(), n,
                                         B.data(), n, w.data());
  if (info != 0) return false;
  Eigen::MatrixXd KX = K * A;
  Eigen::MatrixXd MX = M * A;
  pairs.resize(n);
  for (int i = 0; i < n; ++i) {
    double a = A.col(i).dot(KX.col(i));
    const double b = A.col(i).dot(MX.col(i));
    pairs[i] = {a, b, i};
  }
  vecs = std::move(A);
  return true;
}

void solve_qz(const Eigen::MatrixXd& K, const Eigen::MatrixXd& M, bool want_vectors,
              std::vector<Pair>& pairs, Eigen::MatrixXd& vecs) {
  const int n = static_cast<int>(K.rows());
  Eigen::MatrixXd A = K, B = M;
  Eigen::VectorXd ar(n), ai(n), be(n);
  Eigen::MatrixXd vr(want_vectors ? n : 1, want_vectors ? n : 1);
  double dummy = 0.0;
  const lapack_int info =
      LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, A.data(), n, B.data(), n,
                    ar.data(), ai.data(), be.data(), &dummy, 1, vr.data(), want_vectors ? n : 1);
  if (info != 0) throw NumericalError("QZ iteration failed (info " + std::to_string(info) + ")");
  pairs.resize(n);
  for (int i = 0; i < n; ++i) {
    double a = ar[i], b = be[i];
    if (b < 0.0) a = -a, b = -b;
    pairs[i] = {a, b, i};
  }
  if (want_vectors) vecs = std::move(vr);
}

}  // namespace

Spectrum solve_generalized(const SparseMatrix& Ks, const SparseMatrix& Ms, const SolveOptions& opts) {
  const int n = static_cast<int>(Ks.rows());
  if (Ks.cols() != n || Ms.rows() != n || Ms.cols() != n) {
    throw InputError("K and M must be square and of equal size");
  }
  if (n > opts.n_dense) {
    throw NumericalError("system size " + std::to_string(n) + " exceeds the dense limit " +
                         std::to_string(opts.n_dense));
  }
  Spectrum spec;
  spec.options = opts;
  if (n == 0) return spec;

  const Eigen::MatrixXd K(Ks), M(Ms);
  check_symmetric(K, opts.symmetry_tol, "K");
  check_symmetric(M, opts.symmetry_tol, "M");

  std::vector<Pair> pairs;
  Eigen::MatrixXd vecs;
  if (max_abs(M) == 0.0) {
    spec.infinite_count = n;
    return spec;
  }
  bool done = false;
  if (opts.method == EigenMethod::definite) done = solve_definite(K, M, pairs, vecs);
  if (!done) solve_qz(K, M, opts.want_vectors, pairs, vecs);

  double beta_max = 0.0;
  for (const Pair& p : pairs) beta_max = std::max(beta_max, std::abs(p.beta));
  std::vector<std::pair<double, int>> finite;
  for (const Pair& p : pairs) {
    if (std::abs(p.beta) <= opts.inf_rel_tol * beta_max) {
      ++spec.infinite_count;
    } else {
      finite.push_back({p.alpha / p.beta, p.column});
    }
  }
  // Nearly singular M pushes a few eigenvalues towards infinity, so the zero
  // class is measured against the pencil scale rather than the largest value.
  spec.zero_threshold = opts.zero_rel_tol * pencil_scale(K, M);
  for (auto& f : finite) {
    if (f.first < -spec.zero_threshold) {
      throw NumericalError("negative eigenvalue " + std::to_string(f.first) +
                           " beyond the zero threshold (indefinite pencil)");
    }
    if (std::abs(f.first) <= spec.zero_threshold) {
      f.first = std::max(f.first, 0.0);
      ++spec.zero_count;
    }
  }
  std::stable_sort(finite.begin(), finite.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  // Zeros may include tiny positives; keep the zero class at the front.
  for (auto& f : finite) spec.finite.push_back(f.first);

  if (opts.want_vectors && vecs.size() > 0) {
    int keep = static_cast<int>(finite.size());
    if (opts.k_max > 0) keep = std::min(keep, spec.zero_count + opts.k_max);
    spec.vectors.resize(n, keep);
    for (int i = 0; i < keep; ++i) {
      Eigen::VectorXd x = vecs.col(finite[i].second);
      const double mnorm = x.dot(M * x);
      if (mnorm > 0.0) x /= std::sqrt(mnorm);
      spec.vectors.col(i) = x;
    }
  }
  return spec;
}

std::vector<double> nonzero_eigenvalues(const Spectrum& spec) {
  return {spec.finite.begin() + spec.zero_count, spec.finite.end()};
}

std::vector<double> classify_spectrum(const Spectrum& spec, int k) {
  std::vector<double> out = nonzero_eigenvalues(spec);
  if (k >= 0 && static_cast<int>(out.size()) > k) out.resize(k);
  return out;
}

}  // namespace maxwell
