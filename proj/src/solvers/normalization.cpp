#include "pnapsac/solvers/normalization.hpp"

#include <cmath>

namespace pnapsac::solvers {

std::optional<Eigen::Matrix3d> normalizing_transform(
    std::span<const Eigen::Vector2d> points) {
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());

  double mean_dist = 0;
  for (const auto& p : points) mean_dist += (p - centroid).norm();
  mean_dist /= static_cast<double>(points.size());
  if (mean_dist < 1e-12) return std::nullopt;

  const double s = std::sqrt(2.0) / mean_dist;
  Eigen::Matrix3d t;
  t << s, 0, -s * centroid.x(), 0, s, -s * centroid.y(), 0, 0, 1;
  return t;
}

Eigen::Matrix3d canonicalize(const Eigen::Matrix3d& matrix) {
  Eigen::Matrix3d out = matrix / matrix.norm();
  double best = 0;
  double signed_best = 0;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double value = out(r, c);
      if (std::abs(value) > best) {
        best = std::abs(value);
        signed_best = value;
      }
    }
  }
  if (signed_best < 0) out = -out;
  return out;
}

}  // namespace pnapsac::solvers
