#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pnapsac/types.hpp"

namespace pnapsac::bench {

enum class SceneKind { kLine2D, kLocalizedH, kGlobalH, kLocalizedF, kGlobalF };

const char* scene_name(SceneKind kind);
std::optional<SceneKind> scene_from_name(const std::string& name);
ProblemKind scene_problem(SceneKind kind);

// Recipe for one synthetic scene. cluster_extent is the fraction of the
// first image's area covered by the inlier structure; 1 spreads inliers over
// the whole frame, small values confine them to a random rectangle. The
// localized-* kinds default to 0.1 and the global-* kinds force 1.
struct SceneSpec {
  SceneKind kind = SceneKind::kLocalizedH;
  int n_inliers = 100;
  int n_outliers = 400;
  double noise_sigma = 1.0;
  double cluster_extent = 0.1;
  ImageSizes sizes{640, 480, 640, 480};
  double quality_noise = 0.15;
  uint64_t seed = 0;
};

// The generated scene together with its generating model, kept so tests and
// reports can measure residuals against the true geometry.
struct Scene {
  DataSet data;
  Model truth;
};

// Builds a labeled dataset: n_inliers points consistent with a randomly
// drawn model (line, homography, or two-view epipolar geometry) up to
// isotropic Gaussian pixel noise, plus n_outliers correspondences uniform
// over both frames independently. gt_label is 0 for inliers and -1 for
// outliers. quality is clamp(0,1) of 1 - r/(3*sigma + 3) + N(0, 0.15) with
// r the residual against the generating model, so ordering by quality
// correlates with inlierhood without being exact. Point order is shuffled.
// Draws a fresh geometry up to 100 times when one cannot keep all inliers
// inside the declared bounds, then throws ConfigError.
Scene generate_scene(const SceneSpec& spec);

}  // namespace pnapsac::bench
