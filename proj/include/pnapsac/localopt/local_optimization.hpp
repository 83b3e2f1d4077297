#pragma once

#include "pnapsac/types.hpp"

namespace pnapsac::localopt {

struct LocalOptConfig {
  int max_iters = 4;
  double threshold_multiplier = 4.0;
  // Strategy selector kept for future variants; only iterated least squares
  // exists today.
  const char* kind = "iterated-ls";
};

struct LocalOptResult {
  Model model;
  Score score;
  int rounds = 0;
};

// Iterated least squares around a promising model: round j collects inliers
// at the decaying threshold tau * multiplier^(1 - j/max_iters) (the last
// round runs at tau exactly), refits on them, and keeps whichever model
// scores best at tau. Never returns something worse than the input pair.
// The caller checks the entry condition (enough inliers at
// multiplier * tau to feed a non-minimal fit); without it the input is
// returned unchanged.
LocalOptResult local_optimize(const Model& model, const Score& score,
                              const DataSet& data, double tau,
                              const LocalOptConfig& cfg);

}  // namespace pnapsac::localopt
