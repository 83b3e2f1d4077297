#include "pnapsac/termination/termination.hpp"

#include <algorithm>
#include <cmath>

#include "pnapsac/scoring/scoring.hpp"

namespace pnapsac::termination {

long long required_iterations_relaxed(double eta, double gamma, int m,
                                      double confidence,
                                      long long min_iterations,
                                      long long max_iterations) {
  double effective = eta + gamma;
  if (effective > 1.0) effective = 1.0;
  if (effective <= 0.0) return max_iterations;
  if (effective >= 1.0) return min_iterations;

  const double success = std::pow(effective, m);
  const double denom = std::log1p(-success);
  if (denom == 0.0) return max_iterations;
  const double needed = std::log1p(-confidence) / denom;
  if (!std::isfinite(needed) ||
      needed >= static_cast<double>(max_iterations))
    return max_iterations;
  const long long iterations = static_cast<long long>(std::ceil(needed));
  return std::clamp(iterations, min_iterations, max_iterations);
}

long long required_iterations(double eta, int m, double confidence,
                              long long min_iterations,
                              long long max_iterations) {
  return required_iterations_relaxed(eta, 0.0, m, confidence, min_iterations,
                                     max_iterations);
}

bool should_terminate(const Score& best, int point_count,
                      long long iterations_done, const TerminationConfig& cfg,
                      int m) {
  if (iterations_done >= cfg.max_iterations) return true;
  const double eta = scoring::inlier_ratio(best, point_count);
  const long long needed = required_iterations_relaxed(
      eta, cfg.gamma, m, cfg.confidence, cfg.min_iterations,
      cfg.max_iterations);
  return iterations_done >= needed;
}

}  // namespace pnapsac::termination
