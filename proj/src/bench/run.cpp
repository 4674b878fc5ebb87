#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "maxwell/bench.hpp"

namespace maxwell {

PreparedSystem prepare_system(const Mesh& mesh, const MaterialTable& materials,
                              const RunOptions& opts) {
  PreparedSystem out;
  out.mesh = mesh;
  const Formulation f = formulation_of(mesh);
  SystemPair full;
  DofSet bc;
  if (f == Formulation::edge) {
    const EdgeConnectivity edges = extract_edges(mesh);
    full = assemble_edge(mesh, edges, materials, opts.assembly);
    bc = boundary_dofs(mesh, &edges, f);
  } else {
    full = assemble_nodal_potential(mesh, materials, nodal_frames(mesh, opts.nodal_bc), opts.assembly);
    bc = boundary_dofs(mesh, nullptr, f, opts.nodal_bc);
  }
  out.system = apply_essential_bc(full, bc);
  return out;
}

PreparedSystem prepare_system(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                              const RunOptions& opts) {
  Mesh mesh = generate_mesh(bench.domain, kind, size);
  if (opts.distortion > 0.0) mesh = distort_mesh(mesh, opts.distortion, opts.seed);
  return prepare_system(mesh, bench.domain.materials, opts);
}

namespace {

RunResult solve_prepared(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                         const PreparedSystem& ps, const RunOptions& opts) {
  RunResult r;
  r.case_name = bench.name;
  r.kind = kind;
  r.size = size;
  r.cells = static_cast<int>(ps.mesh.cells.size());
  r.nodes = static_cast<int>(ps.mesh.nodes.size());
  r.fdof = ps.system.fdof;
  if (!ps.system.empty()) {
    const Spectrum spec = solve_generalized(ps.system, opts.solve);
    r.zero_count = spec.zero_count;
    r.infinite_count = spec.infinite_count;
    r.eigenvalues = nonzero_eigenvalues(spec);
  }
  r.match = match_eigenvalues(r.eigenvalues, bench, opts.window);
  return r;
}

}  // namespace

RunResult run_benchmark(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                        const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const PreparedSystem ps = prepare_system(bench, kind, size, opts);
  RunResult r = solve_prepared(bench, kind, size, ps, opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SweepResult min_fdof_sweep(const BenchmarkCase& bench, ElementKind kind, double threshold, int k,
                           int start, const RunOptions& opts, int cap) {
  if (threshold <= 0.0) throw InputError("sweep threshold must be positive");
  if (k < 1 || start < 1) throw InputError("sweep needs k >= 1 and start >= 1");
  auto it = bench.ladders.find(kind);
  if (it == bench.ladders.end()) {
    throw InputError("case '" + bench.name + "' has no ladder for " + std::string(to_string(kind)));
  }
  const Ladder& ladder = it->second;

  SweepResult out;
  out.case_name = bench.name;
  out.kind = kind;
  out.threshold = threshold;
  out.k = k;
  out.start = start;
  out.cap = std::min(cap, opts.solve.n_dense);

  int last_fdof = 0;
  for (int level = ladder.first; level <= ladder.last; ++level) {
    const MeshSize size = ladder.at(level);
    const PreparedSystem ps = prepare_system(bench, kind, size, opts);
    SweepLevel lv;
    lv.level = level;
    lv.size = size;
    lv.fdof = ps.system.fdof;
    if (lv.fdof > out.cap) break;
    if (lv.fdof <= last_fdof) continue;
    last_fdof = lv.fdof;

    const RunResult r = solve_prepared(bench, kind, size, ps, opts);
    lv.solved = true;
    const auto& err = r.match.slot_error;
    for (int s = start - 1; s < start - 1 + k && s < static_cast<int>(err.size()); ++s) {
      lv.errors.push_back(err[s]);
    }
    lv.max_error = r.match.max_error(start - 1, k);
    lv.spurious = r.match.spurious;
    lv.run = r;
    out.levels.push_back(lv);

    if (lv.max_error < out.best_error) {
      out.best_error = lv.max_error;
      out.best_fdof = lv.fdof;
    }
    if (lv.max_error < threshold) {
      out.min_fdof = lv.fdof;
      break;
    }
  }
  return out;
}

DistortionResult distortion_study(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                                  double magnitude, std::uint64_t seed, int k,
                                  const RunOptions& opts) {
  DistortionResult d;
  d.magnitude = magnitude;
  d.seed = seed;
  RunOptions regular = opts;
  regular.distortion = 0.0;
  d.normal = run_benchmark(bench, kind, size, regular);
  RunOptions moved = opts;
  moved.distortion = magnitude;
  moved.seed = seed;
  d.distorted = run_benchmark(bench, kind, size, moved);

  const std::size_t n = std::min({d.normal.eigenvalues.size(), d.distorted.eigenvalues.size(),
                                  static_cast<std::size_t>(std::max(k, 0))});
  for (std::size_t i = 0; i < n; ++i) {
    const double a = d.normal.eigenvalues[i], b = d.distorted.eigenvalues[i];
    d.shifts.push_back(std::abs(b - a) / std::abs(a) * 100.0);
  }
  return d;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace maxwell
