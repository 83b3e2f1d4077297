#include "pnapsac/engine/engine.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

#include "pnapsac/dataset_io.hpp"
#include "pnapsac/neighborhood/multi_layer_grid.hpp"
#include "pnapsac/random.hpp"
#include "pnapsac/samplers/napsac_sampler.hpp"
#include "pnapsac/samplers/progressive_napsac_sampler.hpp"
#include "pnapsac/samplers/prosac_sampler.hpp"
#include "pnapsac/samplers/uniform_sampler.hpp"
#include "pnapsac/scoring/scoring.hpp"
#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::engine {

const char* sampler_name(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kUniform: return "uniform";
    case SamplerKind::kNapsac: return "napsac";
    case SamplerKind::kProsac: return "prosac";
    case SamplerKind::kProgressiveNapsac: return "pnapsac";
  }
  return "unknown";
}

std::optional<SamplerKind> sampler_from_name(const std::string& name) {
  if (name == "uniform" || name == "ransac") return SamplerKind::kUniform;
  if (name == "napsac") return SamplerKind::kNapsac;
  if (name == "prosac") return SamplerKind::kProsac;
  if (name == "pnapsac" || name == "progressive-napsac")
    return SamplerKind::kProgressiveNapsac;
  return std::nullopt;
}

double default_gamma(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kNapsac:
    case SamplerKind::kProgressiveNapsac:
      return 0.1;
    case SamplerKind::kUniform:
    case SamplerKind::kProsac:
      return 0.0;
  }
  return 0.0;
}

double default_threshold(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLine2D: return 1.0;
    case ProblemKind::kHomography: return 3.2;
    case ProblemKind::kFundamentalMatrix: return 1.0;
  }
  return 1.0;
}

namespace {

bool informative_qualities(const DataSet& data) {
  for (int i = 1; i < data.size(); ++i) {
    if (data[i].quality != data[0].quality) return true;
  }
  return false;
}

}  // namespace

RunReport estimate(const DataSet& data, const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  const auto validation = validate_dataset(data, config.problem);
  if (!validation.ok)
    throw ConfigError("dataset rejected: " + validation.message());

  const int n = data.size();
  const int m = minimal_sample_size(config.problem);
  const double tau = config.threshold > 0 ? config.threshold
                                          : default_threshold(config.problem);

  termination::TerminationConfig stop = config.termination;
  stop.gamma = config.gamma.value_or(default_gamma(config.sampler));

  RunReport report;
  report.resolved_threshold = tau;
  report.resolved_gamma = stop.gamma;

  Rng rng(config.seed);

  std::unique_ptr<neighborhood::MultiLayerGrid> grid;
  if (config.sampler == SamplerKind::kNapsac ||
      config.sampler == SamplerKind::kProgressiveNapsac)
    grid = std::make_unique<neighborhood::MultiLayerGrid>(data,
                                                          config.grid_deltas);

  std::vector<double> qualities;
  qualities.reserve(n);
  for (const auto& c : data.points()) qualities.push_back(c.quality);

  std::unique_ptr<samplers::Sampler> sampler;
  switch (config.sampler) {
    case SamplerKind::kUniform:
      sampler = std::make_unique<samplers::UniformSampler>(n, m);
      break;
    case SamplerKind::kNapsac:
      sampler = std::make_unique<samplers::NapsacSampler>(
          *grid, m, config.napsac_neighbors);
      break;
    case SamplerKind::kProsac:
      sampler = std::make_unique<samplers::ProsacSampler>(
          n, m, qualities, config.sampler_budget);
      break;
    case SamplerKind::kProgressiveNapsac:
      sampler = std::make_unique<samplers::ProgressiveNapsacSampler>(
          *grid, m, config.sampler_budget,
          informative_qualities(data) ? samplers::CenterSelection::kProsac
                                      : samplers::CenterSelection::kUniform);
      break;
  }

  const bool oriented_gate =
      config.problem == ProblemKind::kFundamentalMatrix;
  const int refit_floor = nonminimal_fit_size(config.problem);

  MinimalSample sample;
  std::array<Model, 3> candidates;

  while (true) {
    ++report.iterations;
    bool accepted = false;
    double iteration_score = 0;

    if (sampler->draw(rng, sample)) {
      const int count =
          solvers::solve_minimal(data, sample, config.problem, candidates);
      for (int ci = 0; ci < count; ++ci) {
        const Model& candidate = candidates[ci];
        if (oriented_gate &&
            !solvers::oriented_epipolar_check(candidate, data,
                                              sample.indices))
          continue;
        accepted = true;
        Score score = scoring::msac_score(candidate, data, tau);
        iteration_score = std::max(iteration_score, score.value);
        if (report.has_model && score.value <= report.best_score.value)
          continue;

        report.has_model = true;
        report.best_model = candidate;
        report.best_score = std::move(score);
        report.best_sample = sample;

        if (config.use_local_optimization) {
          // Entry condition: a non-minimal fit must have enough support at
          // the widened threshold.
          const double wide =
              tau * config.local_opt.threshold_multiplier;
          const scoring::ResidualEvaluator evaluate(report.best_model);
          int wide_inliers = 0;
          for (int i = 0; i < n && wide_inliers < refit_floor; ++i) {
            if (evaluate(data[i]) < wide) ++wide_inliers;
          }
          if (wide_inliers >= refit_floor) {
            ++report.lo_invocations;
            auto improved =
                localopt::local_optimize(report.best_model,
                                         report.best_score, data, tau,
                                         config.local_opt);
            const bool orientation_ok =
                !oriented_gate ||
                solvers::oriented_epipolar_check(improved.model, data,
                                                 report.best_sample.indices);
            if (improved.score.value > report.best_score.value &&
                orientation_ok) {
              report.best_model = improved.model;
              report.best_score = std::move(improved.score);
            }
            iteration_score =
                std::max(iteration_score, report.best_score.value);
          }
        }
      }
    }

    if (accepted)
      ++report.samples_accepted;
    else
      ++report.samples_rejected;
    if (config.keep_iteration_log)
      report.iteration_log.push_back({sample, iteration_score, accepted});

    if (termination::should_terminate(report.best_score, n,
                                      report.iterations, stop, m))
      break;
  }

  // Final polish: non-minimal fit over the winner's inliers, kept unless it
  // scores worse or breaks the orientation gate.
  if (report.has_model &&
      report.best_score.inlier_count >= refit_floor) {
    const auto polished = solvers::fit_nonminimal(
        data, report.best_score.inlier_indices, config.problem);
    if (polished) {
      Score polished_score = scoring::msac_score(*polished, data, tau);
      const bool orientation_ok =
          !oriented_gate ||
          solvers::oriented_epipolar_check(*polished, data,
                                           report.best_sample.indices);
      if (polished_score.value >= report.best_score.value && orientation_ok) {
        report.best_model = *polished;
        report.best_score = std::move(polished_score);
      }
    }
  }

  report.wall_time_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

EvalRecord evaluate_against_gt(const RunReport& report, const DataSet& data,
                               int gt_label) {
  EvalRecord record;
  std::vector<char> is_gt_inlier(data.size(), 0);
  long long gt_count = 0;
  for (int i = 0; i < data.size(); ++i) {
    if (data[i].gt_label.has_value() && *data[i].gt_label == gt_label) {
      is_gt_inlier[i] = 1;
      ++gt_count;
    }
  }
  if (gt_count == 0) return record;

  record.available = true;
  long long recovered = 0;
  for (int i : report.best_score.inlier_indices) {
    if (is_gt_inlier[i]) ++recovered;
  }
  record.gt_inlier_fraction =
      static_cast<double>(recovered) / static_cast<double>(gt_count);
  record.failure = record.gt_inlier_fraction < 0.5;
  record.found_inlier_ratio =
      scoring::inlier_ratio(report.best_score, data.size());

  if (report.has_model) {
    const scoring::ResidualEvaluator evaluate(report.best_model);
    double sum = 0;
    for (int i = 0; i < data.size(); ++i) {
      if (is_gt_inlier[i]) sum += evaluate(data[i]);
    }
    record.mean_gt_residual = sum / static_cast<double>(gt_count);
  } else {
    record.mean_gt_residual = std::numeric_limits<double>::infinity();
  }
  return record;
}

}  // namespace pnapsac::engine
