#pragma once

#include <Eigen/Core>

#include "pnapsac/types.hpp"

namespace pnapsac::scoring {

// Per-model residual evaluation with the model-dependent setup (inverse
// homography, degeneracy flags) done once. Residuals are pixel distances:
// point-to-line distance for lines, the root-mean-square symmetric transfer
// error for homographies, the first-order epipolar (Sampson) distance for
// fundamental matrices. Unusable geometry (singular homography, vanishing
// gradients) yields an infinite residual, which scores as an outlier.
class ResidualEvaluator {
 public:
  explicit ResidualEvaluator(const Model& model);

  double operator()(const Correspondence& c) const;

 private:
  ProblemKind kind_;
  Eigen::Matrix3d params_;
  Eigen::Matrix3d inverse_;
  bool invertible_ = true;
};

double residual(const Model& model, const Correspondence& c);

// Truncated-quadratic model quality at threshold tau: the score value sums
// max(0, tau^2 - r^2) over all points; inliers are the residuals strictly
// below tau.
Score msac_score(const Model& model, const DataSet& data, double tau);

double inlier_ratio(const Score& score, int point_count);

}  // namespace pnapsac::scoring
