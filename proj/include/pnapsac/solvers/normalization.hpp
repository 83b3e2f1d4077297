#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>

namespace pnapsac::solvers {

// Similarity transform moving the centroid of `points` to the origin and
// their mean distance from it to sqrt(2). Returns nothing when the points
// coincide and no finite scale exists.
std::optional<Eigen::Matrix3d> normalizing_transform(
    std::span<const Eigen::Vector2d> points);

// Unit Frobenius norm with the largest-magnitude entry positive (row-major
// first on magnitude ties), so equal models compare bit-equal.
Eigen::Matrix3d canonicalize(const Eigen::Matrix3d& matrix);

}  // namespace pnapsac::solvers
