#include "maxwell/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maxwell/bench.hpp"
#include "maxwell/kernels.hpp"

namespace maxwell::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct SizeArgs {
  int n = 4;
  int m = 0;
};

struct SolverArgs {
  double zero_tol = 1e-8;
  double inf_tol = 1e-12;
  std::string method = "definite";
  int n_dense = 5000;
  int threads = 1;
  bool refined_quadrature = false;
  bool fd_curls = false;
  std::string nodal_bc = "tangential";
  double window = kDefaultWindow;
  std::string backend = "auto";

  void add(CLI::App* app) {
    app->add_option("--zero-tol", zero_tol, "Zero class: |lambda| <= tol * max|K| / max|M|");
    app->add_option("--inf-tol", inf_tol, "Infinite class: |beta| <= tol * max|beta|");
    app->add_option("--method", method, "Dense eigensolver: definite or qz");
    app->add_option("--n-dense", n_dense, "Largest system handed to the dense solver");
    app->add_option("--threads", threads, "Element assembly threads");
    app->add_flag("--refined-quadrature", refined_quadrature, "Use higher order quadrature (off by default)");
    app->add_flag("--fd-curls", fd_curls, "Finite-difference edge curls (off by default)");
    app->add_option("--nodal-bc", nodal_bc, "Nodal PEC condition: tangential, full or corners");
    app->add_option("--window", window, "Matching window in percent");
    app->add_option("--backend", backend, "Dense kernels: auto, scalar or avx2");
  }

  RunOptions options() const {
    if (backend == "scalar") {
      kernels::set_backend(kernels::Backend::scalar);
    } else if (backend == "avx2" || backend == "auto") {
      kernels::set_backend(kernels::Backend::avx2);
    } else {
      throw InputError("unknown backend '" + backend + "'");
    }
    if (window <= 0.0) throw InputError("--window must be positive");
    if (threads < 1) throw InputError("--threads must be at least 1");
    RunOptions o;
    o.solve.zero_rel_tol = zero_tol;
    o.solve.inf_rel_tol = inf_tol;
    o.solve.method = parse_eigen_method(method);
    o.solve.n_dense = n_dense;
    o.assembly.threads = threads;
    o.assembly.refined_quadrature = refined_quadrature;
    o.assembly.fd_curls = fd_curls;
    o.nodal_bc = parse_nodal_bc(nodal_bc);
    o.window = window;
    return o;
  }
};

void write_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::vector<ElementKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<ElementKind> out;
  for (const std::string& n : names) out.push_back(parse_kind(n));
  return out;
}

MeshSize size_of(const SizeArgs& s) {
  if (s.n < 1 || s.m < 0) throw InputError("--n must be >= 1 and --m >= 0");
  return {s.n, s.m};
}

void print_values(std::ostream& out, const std::vector<double>& v, int k) {
  const int n = std::min<int>(k, static_cast<int>(v.size()));
  char buf[64];
  for (int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%4d  %.6f\n", i + 1, v[i]);
    out << buf;
  }
}

Registry registry_for(const std::string& path) {
  return path.empty() ? builtin_registry() : load_registry(path);
}

Comparison sweep_settings(const BenchmarkCase& c, ElementKind kind) {
  for (const Comparison& cmp : c.comparisons) {
    if (cmp.nodal == kind || cmp.edge == kind) return cmp;
  }
  Comparison d;
  d.threshold = 1.0;
  return d;
}

// ---- mesh ----------------------------------------------------------------------

struct MeshGenArgs {
  std::string domain;
  std::string kind;
  SizeArgs size;
  std::string dielectric = "both_arms";
  std::string output;
};

int cmd_mesh_gen(const MeshGenArgs& a, std::ostream& out) {
  DomainSpec spec = make_domain(parse_domain(a.domain));
  spec.dielectric = parse_dielectric_region(a.dielectric);
  const Mesh mesh = generate_mesh(spec, parse_kind(a.kind), size_of(a.size));
  write_mesh(mesh, a.output);
  out << "cells " << mesh.cells.size() << " nodes " << mesh.nodes.size() << " boundary sides "
      << mesh.boundary.size() << " -> " << a.output << '\n';
  return kOk;
}

struct MeshDistortArgs {
  std::string input;
  std::string output;
  double magnitude = 0.2;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_mesh_distort(const MeshDistortArgs& a, std::ostream& out) {
  const Mesh mesh = distort_mesh(read_mesh(a.input), a.magnitude, a.seed);
  write_mesh(mesh, a.output);
  out << "distorted " << mesh.nodes.size() << " nodes (magnitude " << a.magnitude << ", seed " << a.seed
      << ") -> " << a.output << '\n';
  return kOk;
}

// ---- solve ---------------------------------------------------------------------

struct SolveArgs {
  std::string domain;
  std::string kind;
  std::string mesh;
  SizeArgs size;
  std::string dielectric = "both_arms";
  std::vector<std::string> materials;
  std::string case_name;
  int k = 10;
  double distort = 0.0;
  std::uint64_t seed = kDefaultSeed;
  std::string report;
  std::string dump;
  std::string registry;
  SolverArgs solver;
};

MaterialTable material_overrides(MaterialTable base, const std::vector<std::string>& specs) {
  for (const std::string& s : specs) {
    int id = 0;
    double mu = 0, eps = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d:%lf:%lf%c", &id, &mu, &eps, &tail) != 3 || mu <= 0 || eps <= 0) {
      throw InputError("--material expects id:mu_r:eps_r, got '" + s + "'");
    }
    base[id] = {mu, eps};
  }
  return base;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const RunOptions opts = a.solver.options();
  const Registry reg = registry_for(a.registry);

  BenchmarkCase bench;
  if (!a.case_name.empty()) {
    bench = reg.find(a.case_name);
  } else if (!a.domain.empty()) {
    for (const BenchmarkCase& c : reg.cases) {
      if (c.domain.name == parse_domain(a.domain)) bench = c;
    }
  }
  if (!a.domain.empty()) {
    const DomainSpec spec = make_domain(parse_domain(a.domain));
    if (bench.name.empty() || bench.domain.name != spec.name) bench.domain = spec;
    bench.domain.dielectric = parse_dielectric_region(a.dielectric);
  }
  bench.domain.materials = material_overrides(bench.domain.materials, a.materials);
  if (bench.name.empty()) bench.name = a.domain.empty() ? "mesh" : a.domain;

  Mesh mesh;
  ElementKind kind;
  MeshSize size{0, 0};
  if (!a.mesh.empty()) {
    mesh = read_mesh(a.mesh);
    if (mesh.cells.empty()) throw InputError("mesh has no cells");
    kind = mesh.cells.front().kind;
  } else {
    if (a.domain.empty() || a.kind.empty()) throw InputError("solve needs --mesh or --domain with --kind");
    kind = parse_kind(a.kind);
    size = size_of(a.size);
    mesh = generate_mesh(bench.domain, kind, size);
  }
  if (a.distort > 0.0) mesh = distort_mesh(mesh, a.distort, a.seed);

  const auto t0 = std::chrono::steady_clock::now();
  const PreparedSystem ps = prepare_system(mesh, bench.domain.materials, opts);
  if (!a.dump.empty()) {
    write_matrix_market(ps.system.K, a.dump + "_K.mtx");
    write_matrix_market(ps.system.M, a.dump + "_M.mtx");
  }

  RunResult r;
  r.case_name = bench.name;
  r.kind = kind;
  r.size = size;
  r.cells = static_cast<int>(mesh.cells.size());
  r.nodes = static_cast<int>(mesh.nodes.size());
  r.fdof = ps.system.fdof;
  if (ps.system.empty()) {
    err << "empty system after BCs\n";
  } else {
    const Spectrum spec = solve_generalized(ps.system, opts.solve);
    r.zero_count = spec.zero_count;
    r.infinite_count = spec.infinite_count;
    r.eigenvalues = nonzero_eigenvalues(spec);
  }
  r.match = match_eigenvalues(r.eigenvalues, bench, opts.window);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  out << "kind " << to_string(kind) << " cells " << r.cells << " fdof " << r.fdof << '\n';
  out << "zero_count " << r.zero_count << " infinite_count " << r.infinite_count << '\n';
  print_values(out, r.eigenvalues, a.k);
  if (!a.report.empty()) write_file(a.report, run_report_json(r, a.k));
  return kOk;
}

// ---- bench ---------------------------------------------------------------------

struct BenchArgs {
  std::string case_name;
  std::vector<std::string> kinds;
  double threshold = 0.0;
  int k = 0;
  int start = 0;
  int cap = kDefaultFdofCap;
  bool paper_tables = false;
  std::string out_dir = "bench_out";
  int jobs = 1;
  double magnitude = 0.2;
  std::uint64_t seed = kDefaultSeed;
  std::string registry;
  SolverArgs solver;
};

void bench_tables(const BenchmarkCase& c, const std::vector<ElementKind>& kinds, const BenchArgs& a,
                  const RunOptions& opts, std::ostream& out) {
  std::vector<ElementKind> table;
  for (ElementKind k : kinds) {
    if (c.resolution.count(k)) table.push_back(k);
  }
  std::vector<RunResult> runs(table.size());
  parallel_for(static_cast<int>(table.size()), a.jobs,
               [&](int i) { runs[i] = run_benchmark(c, table[i], c.resolution.at(table[i]), opts); });
  const std::string csv = reference_table_csv(c, runs);
  write_file(join_path(a.out_dir, c.name + ".csv"), csv);
  write_file(join_path(a.out_dir, c.name + "_runs.csv"), runs_csv(runs));
  out << "# " << c.name << '\n' << csv;

  std::vector<ElementKind> moved;
  for (ElementKind k : kinds) {
    if (c.distortion.count(k)) moved.push_back(k);
  }
  if (moved.empty()) return;
  std::vector<DistortionResult> studies(moved.size());
  parallel_for(static_cast<int>(moved.size()), a.jobs, [&](int i) {
    studies[i] = distortion_study(c, moved[i], c.distortion.at(moved[i]), a.magnitude, a.seed, 5, opts);
  });
  const std::string dcsv = distortion_table_csv(studies);
  write_file(join_path(a.out_dir, "distortion.csv"), dcsv);
  out << "# distortion\n" << dcsv;
}

void bench_sweeps(const BenchmarkCase& c, const std::vector<ElementKind>& kinds, const BenchArgs& a,
                  const RunOptions& opts, std::ostream& out) {
  std::vector<ElementKind> laddered;
  for (ElementKind k : kinds) {
    if (c.ladders.count(k)) laddered.push_back(k);
  }
  std::vector<SweepResult> sweeps(laddered.size());
  parallel_for(static_cast<int>(laddered.size()), a.jobs, [&](int i) {
    Comparison s = sweep_settings(c, laddered[i]);
    if (a.threshold > 0) s.threshold = a.threshold;
    if (a.k > 0) s.k = a.k;
    if (a.start > 0) s.start = a.start;
    sweeps[i] = min_fdof_sweep(c, laddered[i], s.threshold, s.k, s.start, opts, a.cap);
  });
  std::vector<RunResult> runs;
  std::string json = "[\n";
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    for (const SweepLevel& lv : sweeps[i].levels) runs.push_back(lv.run);
    json += sweep_json(sweeps[i]) + (i + 1 < sweeps.size() ? ",\n" : "\n");
  }
  json += "]\n";
  write_file(join_path(a.out_dir, c.name + "_sweeps.json"), json);
  write_file(join_path(a.out_dir, c.name + "_runs.csv"), runs_csv(runs));
  const std::string csv = min_fdof_csv(sweeps);
  write_file(join_path(a.out_dir, c.name + "_min_fdof.csv"), csv);
  write_file(join_path(a.out_dir, c.name + "_min_fdof.svg"),
             min_fdof_svg("Minimum FDOF, " + c.name, sweeps));
  out << "# " << c.name << '\n' << csv;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const RunOptions opts = a.solver.options();
  const Registry reg = registry_for(a.registry);
  if (a.jobs < 1) throw InputError("--jobs must be at least 1");
  std::vector<const BenchmarkCase*> cases;
  if (a.case_name == "all") {
    for (const BenchmarkCase& c : reg.cases) cases.push_back(&c);
  } else {
    cases.push_back(&reg.find(a.case_name));
  }
  const std::vector<ElementKind> requested = parse_kinds(a.kinds);
  for (const BenchmarkCase* c : cases) {
    const std::vector<ElementKind>& kinds = requested.empty() ? c->kinds : requested;
    if (a.paper_tables) {
      bench_tables(*c, kinds, a, opts, out);
    } else {
      bench_sweeps(*c, kinds, a, opts, out);
    }
  }
  return kOk;
}

// ---- sweep / distort-study -----------------------------------------------------

struct SweepArgs {
  std::string case_name;
  std::string kind;
  double threshold = 1.0;
  int k = 5;
  int start = 1;
  int cap = kDefaultFdofCap;
  std::string output;
  std::string registry;
  SolverArgs solver;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const RunOptions opts = a.solver.options();
  const Registry reg = registry_for(a.registry);
  const SweepResult s =
      min_fdof_sweep(reg.find(a.case_name), parse_kind(a.kind), a.threshold, a.k, a.start, opts, a.cap);
  char buf[128];
  for (const SweepLevel& lv : s.levels) {
    std::snprintf(buf, sizeof buf, "level %3d  fdof %6d  max error %10.4f%%  spurious %zu\n", lv.level,
                  lv.fdof, lv.max_error, lv.spurious.size());
    out << buf;
  }
  if (s.min_fdof) {
    out << "min_fdof " << *s.min_fdof << '\n';
  } else {
    out << "min_fdof not achieved (best " << s.best_error << "% at " << s.best_fdof << " FDOF)\n";
  }
  if (!a.output.empty()) write_file(a.output, sweep_json(s));
  return kOk;
}

struct DistortArgs {
  std::string case_name = "curved_l";
  std::string kind;
  SizeArgs size{0, 0};
  double magnitude = 0.2;
  std::uint64_t seed = kDefaultSeed;
  int k = 5;
  std::string output;
  std::string registry;
  SolverArgs solver;
};

int cmd_distort_study(const DistortArgs& a, std::ostream& out) {
  const RunOptions opts = a.solver.options();
  const Registry reg = registry_for(a.registry);
  const BenchmarkCase& c = reg.find(a.case_name);
  const ElementKind kind = parse_kind(a.kind);
  MeshSize size{a.size.n, a.size.m};
  if (size.n == 0) {
    if (c.distortion.count(kind)) {
      size = c.distortion.at(kind);
    } else if (c.resolution.count(kind)) {
      size = c.resolution.at(kind);
    } else {
      throw InputError("no default mesh for " + std::string(to_string(kind)) + "; pass --n");
    }
  }
  const DistortionResult d = distortion_study(c, kind, size_of({size.n, size.m}), a.magnitude, a.seed, a.k, opts);
  char buf[128];
  out << "fdof " << d.normal.fdof << " zeros " << d.normal.zero_count << " / " << d.distorted.zero_count << '\n';
  for (std::size_t i = 0; i < d.shifts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%4zu  %.6f  %.6f  %.4f%%\n", i + 1, d.normal.eigenvalues[i],
                  d.distorted.eigenvalues[i], d.shifts[i]);
    out << buf;
  }
  if (!a.output.empty()) write_file(a.output, distortion_json(d, a.k));
  return kOk;
}

}  // namespace

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("MAXWELL_EIGEN_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used, 0);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("MAXWELL_EIGEN_SEED is not an integer: ") + env);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maxwell cavity eigenvalues with nodal and edge finite elements", "maxwell_eigen"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML file");

  std::uint64_t seed = kDefaultSeed;
  try {
    seed = default_seed(kDefaultSeed);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // mesh gen / mesh distort
  CLI::App* mesh = app.add_subcommand("mesh", "Generate or distort meshes");
  mesh->require_subcommand(1);
  MeshGenArgs gen;
  CLI::App* gen_cmd = mesh->add_subcommand("gen", "Generate a structured mesh");
  gen_cmd->add_option("--domain", gen.domain, "square, circle, l_shape, cracked_circle, curved_l, inhomogeneous_l")
      ->required();
  gen_cmd->add_option("--kind", gen.kind, "Q4, Q9, T6, T3, EQ4, EQ12, ET8, ET3")->required();
  gen_cmd->add_option("--n", gen.size.n, "Primary resolution");
  gen_cmd->add_option("--m", gen.size.m, "Secondary resolution (0 = same as n)");
  gen_cmd->add_option("--dielectric", gen.dielectric, "Inhomogeneous L region: corner, arm, both_arms");
  gen_cmd->add_option("-o,--output", gen.output, "Mesh JSON file")->required();

  MeshDistortArgs dist;
  dist.seed = seed;
  CLI::App* dist_cmd = mesh->add_subcommand("distort", "Perturb the nodes of a mesh");
  dist_cmd->add_option("-i,--input", dist.input, "Mesh JSON file")->required();
  dist_cmd->add_option("-o,--output", dist.output, "Distorted mesh JSON file")->required();
  dist_cmd->add_option("--magnitude", dist.magnitude, "Fraction of the shortest incident edge, <= 0.3");
  dist_cmd->add_option("--seed", dist.seed, "Perturbation seed (MAXWELL_EIGEN_SEED overrides the default)");

  // solve
  SolveArgs solve;
  solve.seed = seed;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Assemble and solve one eigenproblem");
  solve_cmd->add_option("--domain", solve.domain, "Generated domain");
  solve_cmd->add_option("--kind", solve.kind, "Element kind for generated meshes");
  solve_cmd->add_option("--mesh", solve.mesh, "Mesh JSON file instead of --domain");
  solve_cmd->add_option("--n", solve.size.n, "Primary resolution");
  solve_cmd->add_option("--m", solve.size.m, "Secondary resolution (0 = same as n)");
  solve_cmd->add_option("--dielectric", solve.dielectric, "Inhomogeneous L region: corner, arm, both_arms");
  solve_cmd->add_option("--material", solve.materials, "Material override id:mu_r:eps_r (repeatable)");
  solve_cmd->add_option("--case", solve.case_name, "Benchmark case used for matching (default: the domain's)");
  solve_cmd->add_option("--k", solve.k, "Number of nonzero eigenvalues printed and reported");
  solve_cmd->add_option("--distort", solve.distort, "Distortion magnitude applied before solving");
  solve_cmd->add_option("--seed", solve.seed, "Distortion seed");
  solve_cmd->add_option("--report", solve.report, "JSON report path (none if empty)");
  solve_cmd->add_option("--dump-matrices", solve.dump, "Write PREFIX_K.mtx and PREFIX_M.mtx");
  solve_cmd->add_option("--registry", solve.registry, "Benchmark registry JSON (built-in if empty)");
  solve.solver.add(solve_cmd);

  // bench
  BenchArgs bench;
  bench.seed = seed;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark matrix over kinds and ladders");
  bench_cmd->add_option("--case", bench.case_name, "Registered case name or 'all'")->required();
  bench_cmd->add_option("--kinds", bench.kinds, "Comma separated kinds (default: the case's)")->delimiter(',');
  bench_cmd->add_option("--threshold", bench.threshold, "Sweep error threshold in percent (0 = per case)");
  bench_cmd->add_option("--k", bench.k, "Tracked eigenvalues (0 = per case)");
  bench_cmd->add_option("--start", bench.start, "First tracked reference, 1-based (0 = per case)");
  bench_cmd->add_option("--cap", bench.cap, "FDOF cap of the sweeps");
  bench_cmd->add_flag("--paper-tables", bench.paper_tables,
                      "Reference tables at the registered resolutions instead of sweeps (off by default)");
  bench_cmd->add_option("--out-dir", bench.out_dir, "Output directory");
  bench_cmd->add_option("--jobs", bench.jobs, "Parallel runs");
  bench_cmd->add_option("--magnitude", bench.magnitude, "Distortion magnitude for the distortion table");
  bench_cmd->add_option("--seed", bench.seed, "Distortion seed");
  bench_cmd->add_option("--registry", bench.registry, "Benchmark registry JSON (built-in if empty)");
  bench.solver.add(bench_cmd);

  // sweep
  SweepArgs sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Minimum-FDOF sweep for one kind");
  sweep_cmd->add_option("--case", sweep.case_name, "Registered case name")->required();
  sweep_cmd->add_option("--kind", sweep.kind, "Element kind")->required();
  sweep_cmd->add_option("--threshold", sweep.threshold, "Error threshold in percent");
  sweep_cmd->add_option("--k", sweep.k, "Tracked eigenvalues");
  sweep_cmd->add_option("--start", sweep.start, "First tracked reference, 1-based");
  sweep_cmd->add_option("--cap", sweep.cap, "FDOF cap");
  sweep_cmd->add_option("-o,--output", sweep.output, "JSON result path (none if empty)");
  sweep_cmd->add_option("--registry", sweep.registry, "Benchmark registry JSON (built-in if empty)");
  sweep.solver.add(sweep_cmd);

  // distort-study
  DistortArgs ds;
  ds.seed = seed;
  CLI::App* ds_cmd = app.add_subcommand("distort-study", "Normal versus distorted mesh");
  ds_cmd->add_option("--case", ds.case_name, "Registered case name");
  ds_cmd->add_option("--kind", ds.kind, "Element kind")->required();
  ds_cmd->add_option("--n", ds.size.n, "Primary resolution (0 = registered distortion mesh)");
  ds_cmd->add_option("--m", ds.size.m, "Secondary resolution");
  ds_cmd->add_option("--magnitude", ds.magnitude, "Distortion magnitude");
  ds_cmd->add_option("--seed", ds.seed, "Distortion seed");
  ds_cmd->add_option("--k", ds.k, "Compared eigenvalues");
  ds_cmd->add_option("-o,--output", ds.output, "JSON result path (none if empty)");
  ds_cmd->add_option("--registry", ds.registry, "Benchmark registry JSON (built-in if empty)");
  ds.solver.add(ds_cmd);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return cmd_mesh_gen(gen, out);
    if (dist_cmd->parsed()) return cmd_mesh_distort(dist, out);
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    if (ds_cmd->parsed()) return cmd_distort_study(ds, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace maxwell::cli
