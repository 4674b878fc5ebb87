#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxwell/assembly.hpp"
#include "maxwell/eigensolver.hpp"
#include "maxwell/mesh.hpp"

namespace maxwell {

struct ReferenceValue {
  double value = 0.0;
  int multiplicity = 1;
  bool singular = false;
};

/// A ladder of meshes: level j uses size j * base, j in [first, last].
struct Ladder {
  MeshSize base;
  int first = 1;
  int last = 12;

  MeshSize at(int level) const { return {base.n * level, base.m * level}; }
};

/// Nodal/edge pairing used for the minimum-FDOF bar data.
struct Comparison {
  ElementKind nodal = ElementKind::Q9;
  ElementKind edge = ElementKind::EQ12;
  double threshold = 1.0;  // percent
  int k = 5;
  int start = 1;           // 1-based reference slot (multiplicity expanded)
};

struct BenchmarkCase {
  std::string name;
  DomainSpec domain;
  std::vector<ReferenceValue> reference;  // ascending
  std::string source;
  std::vector<ElementKind> kinds;               // table columns, in order
  std::map<ElementKind, MeshSize> resolution;   // table mesh per kind
  std::map<ElementKind, Ladder> ladders;
  std::vector<Comparison> comparisons;
  std::map<ElementKind, MeshSize> distortion;   // empty unless the case has a distortion table

  /// References expanded by multiplicity.
  std::vector<ReferenceValue> slots() const;
};

/// Versioned registry of benchmark cases. The built-in registry is compiled
/// in; load_registry() accepts the same JSON layout from a file.
struct Registry {
  int version = 1;
  std::vector<BenchmarkCase> cases;

  const BenchmarkCase& find(std::string_view name) const;  // throws InputError
  std::vector<std::string> names() const;
};

const Registry& builtin_registry();
std::string_view builtin_registry_json();
Registry parse_registry(std::string_view json_text);
Registry load_registry(const std::string& path);

// ---- matching ----------------------------------------------------------------

inline constexpr double kDefaultWindow = 15.0;

struct MatchPair {
  double computed = 0.0;
  double reference = 0.0;
  double error = 0.0;  // percent
  int slot = 0;        // 0-based expanded reference slot
};

enum class SlotStatus { matched, missed, unreached };

struct MatchReport {
  std::vector<MatchPair> pairs;
  std::vector<double> missed;       // references passed over with computed values beyond them
  std::vector<double> spurious;     // computed values with no reference inside the window
  std::vector<double> untracked;    // computed values above the last reference
  std::vector<double> unreached;    // references above the last computed value
  std::vector<SlotStatus> slot_status;
  std::vector<double> slot_error;   // percent, +inf unless matched
  std::vector<int> spurious_after;  // per spurious value: slots consumed before it
  bool missed_singular = false;

  /// Worst error over slots [start, start + k) (0-based start); +inf if any
  /// of them is unmatched, NaN if the range is empty.
  double max_error(int start, int k) const;
  double max_error_first_k(int k) const { return max_error(0, k); }
};

/// Greedy ascending assignment of computed values to reference slots.
MatchReport match_eigenvalues(std::vector<double> computed, const BenchmarkCase& bench,
                              double window = kDefaultWindow);

// ---- runs --------------------------------------------------------------------

struct RunOptions {
  SolveOptions solve;
  AssemblyOptions assembly;
  NodalBc nodal_bc = NodalBc::tangential;
  double window = kDefaultWindow;
  double distortion = 0.0;  // magnitude, 0 = regular mesh
  std::uint64_t seed = 7;
};

struct RunResult {
  std::string case_name;
  ElementKind kind = ElementKind::EQ4;
  MeshSize size;
  int cells = 0;
  int nodes = 0;
  int fdof = 0;
  int zero_count = 0;
  int infinite_count = 0;
  std::vector<double> eigenvalues;  // nonzero finite, ascending
  MatchReport match;
  double seconds = 0.0;
};

/// Discrete system of a case mesh after essential conditions.
struct PreparedSystem {
  Mesh mesh;
  SystemPair system;
};

PreparedSystem prepare_system(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                              const RunOptions& opts = {});
PreparedSystem prepare_system(const Mesh& mesh, const MaterialTable& materials,
                              const RunOptions& opts = {});

RunResult run_benchmark(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                        const RunOptions& opts = {});

inline constexpr int kDefaultFdofCap = 10000;

struct SweepLevel {
  int level = 0;
  MeshSize size;
  int fdof = 0;
  std::vector<double> errors;  // tracked slots, +inf when unmatched
  double max_error = std::numeric_limits<double>::infinity();
  std::vector<double> spurious;
  bool solved = false;
  RunResult run;
};

struct SweepResult {
  std::string case_name;
  ElementKind kind = ElementKind::EQ4;
  double threshold = 0.0;
  int k = 0;
  int start = 1;
  int cap = 0;
  std::vector<SweepLevel> levels;
  std::optional<int> min_fdof;
  double best_error = std::numeric_limits<double>::infinity();
  int best_fdof = 0;
};

/// Walks the case ladder for `kind` until every tracked error is below
/// `threshold` (percent) or the next mesh exceeds `cap` free dofs. The cap
/// is clamped to the dense solver limit.
SweepResult min_fdof_sweep(const BenchmarkCase& bench, ElementKind kind, double threshold, int k,
                           int start, const RunOptions& opts = {}, int cap = kDefaultFdofCap);

struct DistortionResult {
  RunResult normal;
  RunResult distorted;
  std::vector<double> shifts;  // percent, per index over the common nonzero prefix
  double magnitude = 0.0;
  std::uint64_t seed = 0;
};

DistortionResult distortion_study(const BenchmarkCase& bench, ElementKind kind, MeshSize size,
                                  double magnitude, std::uint64_t seed, int k = 10,
                                  const RunOptions& opts = {});

/// Runs `fn(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

// ---- reports -----------------------------------------------------------------

/// Deterministic report; run time and wall-clock stamp go under "metadata".
std::string run_report_json(const RunResult& r, int k, bool metadata = true);
std::string sweep_json(const SweepResult& s);
std::string distortion_json(const DistortionResult& d, int k);

/// Kind name, with the triangle companion for meshes that mix both ("EQ12&ET8").
std::string column_label(const BenchmarkCase& bench, ElementKind kind);

/// One row per eigenvalue per run.
std::string runs_csv(const std::vector<RunResult>& runs);
std::string min_fdof_csv(const std::vector<SweepResult>& sweeps);
std::string min_fdof_svg(const std::string& title, const std::vector<SweepResult>& sweeps);

/// Reference column plus one column per run, spurious rows interleaved,
/// "-" for missed references; trailer rows with FDOF and zero counts.
std::string reference_table_csv(const BenchmarkCase& bench, const std::vector<RunResult>& runs);
std::string distortion_table_csv(const std::vector<DistortionResult>& studies);

}  // namespace maxwell
