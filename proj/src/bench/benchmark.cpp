#include "pnapsac/bench/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace pnapsac::bench {

namespace {

double mean_of(const std::vector<double>& values) {
  double sum = 0;
  for (double v : values) sum += v;
  return values.empty() ? 0 : sum / static_cast<double>(values.size());
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const size_t half = values.size() / 2;
  if (values.size() % 2 == 1) return values[half];
  return 0.5 * (values[half - 1] + values[half]);
}

RunResult execute_run(const Scene& scene, const SceneSpec& spec,
                      engine::SamplerKind sampler, int run,
                      const BenchmarkConfig& cfg) {
  RunResult out;
  out.scene = scene_name(spec.kind);
  out.sampler = engine::sampler_name(sampler);
  out.run = run;
  out.seed = cfg.base_seed + static_cast<uint64_t>(run);

  engine::EngineConfig ec;
  ec.problem = scene_problem(spec.kind);
  ec.sampler = sampler;
  ec.threshold = cfg.threshold;
  ec.gamma = cfg.gamma;
  ec.seed = out.seed;
  ec.termination.confidence = cfg.confidence;
  ec.termination.max_iterations = cfg.max_iterations;
  ec.use_local_optimization = cfg.use_local_optimization;

  try {
    const auto report = engine::estimate(scene.data, ec);
    const auto eval = engine::evaluate_against_gt(report, scene.data, 0);
    out.error = eval.mean_gt_residual;
    out.inlier_pct = 100.0 * eval.found_inlier_ratio;
    out.failure = eval.failure || !report.has_model;
    out.time_ms = report.wall_time_sec * 1000.0;
    out.iterations = report.iterations;
  } catch (const std::exception&) {
    out.failure = true;
    out.error = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace

BenchmarkResult run_benchmark(const std::vector<SceneSpec>& specs,
                              const std::vector<engine::SamplerKind>& samplers,
                              const BenchmarkConfig& cfg) {
  if (cfg.runs < 1) throw ConfigError("benchmark needs at least one run");
  if (specs.empty()) throw ConfigError("benchmark needs at least one scene");
  if (samplers.empty())
    throw ConfigError("benchmark needs at least one sampler");

  std::vector<Scene> scenes;
  scenes.reserve(specs.size());
  for (const auto& spec : specs) scenes.push_back(generate_scene(spec));

  const int per_scene = static_cast<int>(samplers.size()) * cfg.runs;
  const int total = static_cast<int>(specs.size()) * per_scene;

  BenchmarkResult result;
  result.raw.resize(total);
  const auto work = [&](int index) {
    const int si = index / per_scene;
    const int rest = index % per_scene;
    const int pi = rest / cfg.runs;
    const int run = rest % cfg.runs;
    result.raw[index] =
        execute_run(scenes[si], specs[si], samplers[pi], run, cfg);
  };

  const int workers = std::max(1, cfg.threads);
  if (workers == 1 || total == 1) {
    for (int i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
          work(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  for (size_t si = 0; si < specs.size(); ++si) {
    for (size_t pi = 0; pi < samplers.size(); ++pi) {
      const int base =
          static_cast<int>(si) * per_scene + static_cast<int>(pi) * cfg.runs;
      AggregateRow row;
      row.scene = scene_name(specs[si].kind);
      row.sampler = engine::sampler_name(samplers[pi]);
      row.runs = cfg.runs;
      std::vector<double> errors, inliers, times, iters;
      int failures = 0;
      for (int r = 0; r < cfg.runs; ++r) {
        const RunResult& rr = result.raw[base + r];
        errors.push_back(rr.error);
        inliers.push_back(rr.inlier_pct);
        times.push_back(rr.time_ms);
        iters.push_back(static_cast<double>(rr.iterations));
        if (rr.failure) ++failures;
      }
      row.mean_error = mean_of(errors);
      row.median_error = median_of(errors);
      row.mean_inlier_pct = mean_of(inliers);
      row.median_inlier_pct = median_of(inliers);
      row.failure_pct = 100.0 * failures / static_cast<double>(cfg.runs);
      row.mean_time_ms = mean_of(times);
      row.median_time_ms = median_of(times);
      row.mean_iterations = mean_of(iters);
      row.median_iterations = median_of(iters);
      result.aggregates.push_back(std::move(row));
    }
  }
  return result;
}

std::vector<SweepPoint> sweep_gamma(const SceneSpec& spec,
                                    engine::SamplerKind sampler,
                                    const std::vector<double>& gammas,
                                    const BenchmarkConfig& cfg) {
  if (gammas.empty()) throw ConfigError("gamma sweep needs at least one value");

  std::vector<SweepPoint> points;
  points.reserve(gammas.size());
  for (double gamma : gammas) {
    BenchmarkConfig point_cfg = cfg;
    point_cfg.gamma = gamma;
    const auto bench = run_benchmark({spec}, {sampler}, point_cfg);
    SweepPoint point;
    point.gamma = gamma;
    point.stats = bench.aggregates.front();
    points.push_back(std::move(point));
  }

  const AggregateRow& base = points.front().stats;
  const auto relative = [](double value, double reference) {
    return reference > 0 ? value / reference : 1.0;
  };
  for (auto& point : points) {
    point.rel_iterations =
        relative(point.stats.mean_iterations, base.mean_iterations);
    point.rel_error = relative(point.stats.mean_error, base.mean_error);
    point.rel_time = relative(point.stats.mean_time_ms, base.mean_time_ms);
    point.failure_delta_pp = point.stats.failure_pct - base.failure_pct;
  }
  return points;
}

}  // namespace pnapsac::bench
