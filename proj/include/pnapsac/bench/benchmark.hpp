#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnapsac/bench/scene.hpp"
#include "pnapsac/engine/engine.hpp"

namespace pnapsac::bench {

// One engine run on one scene, flattened for reporting. `error` is the mean
// residual of the found model over the ground-truth inliers; `failure`
// means under half of them were recovered (or the run produced no model).
struct RunResult {
  std::string scene;
  std::string sampler;
  int run = 0;
  uint64_t seed = 0;
  double error = 0;
  double inlier_pct = 0;
  bool failure = false;
  double time_ms = 0;
  long long iterations = 0;
};

// Per (scene, sampler) summary over the paired runs.
struct AggregateRow {
  std::string scene;
  std::string sampler;
  int runs = 0;
  double mean_error = 0, median_error = 0;
  double mean_inlier_pct = 0, median_inlier_pct = 0;
  double failure_pct = 0;
  double mean_time_ms = 0, median_time_ms = 0;
  double mean_iterations = 0, median_iterations = 0;

  bool operator==(const AggregateRow&) const = default;
};

struct BenchmarkConfig {
  int runs = 100;
  uint64_t base_seed = 1;
  double threshold = 0;        // <= 0 picks the per-problem default
  double confidence = 0.99;
  std::optional<double> gamma; // unset picks the per-sampler default
  long long max_iterations = 100000;
  bool use_local_optimization = true;
  int threads = 1;
};

struct BenchmarkResult {
  std::vector<RunResult> raw;  // ordered by (scene, sampler, run)
  std::vector<AggregateRow> aggregates;
};

// Runs every sampler on every scene `cfg.runs` times. Run r uses engine
// seed base_seed + r for every sampler, so cross-sampler comparisons are
// matched draw-for-draw. Each scene is generated once from its own spec
// seed and shared by all runs. Engine errors count as failed runs. Results
// are identical across thread counts except for the timing fields.
BenchmarkResult run_benchmark(const std::vector<SceneSpec>& specs,
                              const std::vector<engine::SamplerKind>& samplers,
                              const BenchmarkConfig& cfg);

// One point of a gamma sweep: absolute stats plus curves relative to the
// first gamma in the sweep (relative value 1 when the base is zero).
// failure_delta_pp is the failure-rate change in percentage points.
struct SweepPoint {
  double gamma = 0;
  AggregateRow stats;
  double rel_iterations = 1;
  double rel_error = 1;
  double rel_time = 1;
  double failure_delta_pp = 0;
};

std::vector<SweepPoint> sweep_gamma(const SceneSpec& spec,
                                    engine::SamplerKind sampler,
                                    const std::vector<double>& gammas,
                                    const BenchmarkConfig& cfg);

enum class ReportFormat { kCsv, kJson, kMarkdown };

const char* format_name(ReportFormat format);
std::optional<ReportFormat> format_from_name(const std::string& name);

std::string raw_csv(const std::vector<RunResult>& raw);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);
std::string aggregate_markdown(const std::vector<AggregateRow>& rows);
std::string aggregate_json(const std::vector<AggregateRow>& rows);
std::vector<AggregateRow> aggregates_from_json(const std::string& text);
std::string sweep_csv(const std::vector<SweepPoint>& points);

// Writes the aggregate table to `path` in the requested format. Empty input
// violates the precondition (ConfigError); an unwritable path throws
// std::runtime_error.
void emit_report(const std::vector<AggregateRow>& rows, ReportFormat format,
                 const std::string& path);

}  // namespace pnapsac::bench
