#include "pnapsac/localopt/local_optimization.hpp"

#include <cmath>
#include <vector>

#include "pnapsac/scoring/scoring.hpp"
#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::localopt {

LocalOptResult local_optimize(const Model& model, const Score& score,
                              const DataSet& data, double tau,
                              const LocalOptConfig& cfg) {
  LocalOptResult best{model, score, 0};
  Model current = model;

  for (int j = 1; j <= cfg.max_iters; ++j) {
    const double theta =
        tau * std::pow(cfg.threshold_multiplier,
                       1.0 - static_cast<double>(j) / cfg.max_iters);
    const scoring::ResidualEvaluator evaluate(current);
    std::vector<int> inliers;
    for (int i = 0; i < data.size(); ++i) {
      if (evaluate(data[i]) < theta) inliers.push_back(i);
    }
    if (static_cast<int>(inliers.size()) < nonminimal_fit_size(model.kind))
      break;
    const auto refit = solvers::fit_nonminimal(data, inliers, model.kind);
    if (!refit) break;
    Score refit_score = scoring::msac_score(*refit, data, tau);
    if (refit_score.value > best.score.value) {
      best.model = *refit;
      best.score = std::move(refit_score);
    }
    current = *refit;
    ++best.rounds;
  }
  return best;
}

}  // namespace pnapsac::localopt
