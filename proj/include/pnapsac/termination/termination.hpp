#pragma once

#include "pnapsac/types.hpp"

namespace pnapsac::termination {

struct TerminationConfig {
  double confidence = 0.99;       // mu
  double gamma = 0.0;             // inlier-ratio relaxation
  long long max_iterations = 100000;
  long long min_iterations = 1;
};

// Iterations needed to draw at least one all-inlier minimal sample with
// probability `confidence` at inlier ratio `eta`:
//   ceil(log(1 - confidence) / log(1 - eta^m)),
// clamped to [min_iterations, max_iterations]. eta <= 0 pins the maximum,
// eta >= 1 the minimum.
long long required_iterations(double eta, int m, double confidence,
                              long long min_iterations,
                              long long max_iterations);

// Same bound with the ratio relaxed to eta + gamma (clamped so it never
// exceeds 1). Local samplers concentrate inliers inside neighborhoods, so
// their effective ratio is higher than the global one; gamma = 0 reduces to
// the strict bound exactly.
long long required_iterations_relaxed(double eta, double gamma, int m,
                                      double confidence,
                                      long long min_iterations,
                                      long long max_iterations);

// True once `iterations_done` covers the relaxed requirement for the best
// score so far, or the hard iteration cap.
bool should_terminate(const Score& best, int point_count,
                      long long iterations_done, const TerminationConfig& cfg,
                      int m);

}  // namespace pnapsac::termination
