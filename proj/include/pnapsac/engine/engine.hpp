#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnapsac/localopt/local_optimization.hpp"
#include "pnapsac/termination/termination.hpp"
#include "pnapsac/types.hpp"

namespace pnapsac::engine {

enum class SamplerKind { kUniform, kNapsac, kProsac, kProgressiveNapsac };

const char* sampler_name(SamplerKind kind);
std::optional<SamplerKind> sampler_from_name(const std::string& name);

// Local samplers keep drawing from inlier-dense neighborhoods, so their
// effective inlier ratio beats the global one; their stopping rule is
// relaxed by this default unless the caller overrides gamma.
double default_gamma(SamplerKind kind);

double default_threshold(ProblemKind problem);  // pixels

struct EngineConfig {
  ProblemKind problem = ProblemKind::kHomography;
  SamplerKind sampler = SamplerKind::kProgressiveNapsac;
  double threshold = 0;  // <= 0 selects the per-problem default
  termination::TerminationConfig termination;
  std::optional<double> gamma;  // unset selects the per-sampler default
  uint64_t seed = 0;
  double sampler_budget = 100000;
  std::vector<int> grid_deltas = {16, 8, 4, 2, 1};
  int napsac_neighbors = 20;
  bool use_local_optimization = true;
  localopt::LocalOptConfig local_opt;
  bool keep_iteration_log = false;
};

struct IterationRecord {
  MinimalSample sample;
  double score_value = 0;
  bool accepted = false;
};

struct RunReport {
  bool has_model = false;
  Model best_model;
  Score best_score;
  MinimalSample best_sample;
  long long iterations = 0;
  long long samples_accepted = 0;
  long long samples_rejected = 0;
  long long lo_invocations = 0;
  double resolved_threshold = 0;
  double resolved_gamma = 0;
  double wall_time_sec = 0;
  std::vector<IterationRecord> iteration_log;
};

// One full robust estimation run. Validates the dataset (throws ConfigError
// when it cannot be used), then repeats draw / solve / score / local
// optimization until the adaptive stopping rule or the iteration cap fires,
// and polishes the winner with a non-minimal fit over its inliers.
// Deterministic given (data, config) up to wall_time_sec.
RunReport estimate(const DataSet& data, const EngineConfig& config);

struct EvalRecord {
  bool available = false;       // ground-truth labels present
  double gt_inlier_fraction = 0;  // recovered share of the labeled structure
  bool failure = true;          // recovered fraction below one half
  double mean_gt_residual = 0;  // best model residual over labeled inliers
  double found_inlier_ratio = 0;
};

EvalRecord evaluate_against_gt(const RunReport& report, const DataSet& data,
                               int gt_label);

}  // namespace pnapsac::engine
