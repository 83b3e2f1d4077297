#pragma once

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pnapsac {

// Estimation problems supported by the engine.
enum class ProblemKind { kLine2D, kHomography, kFundamentalMatrix };

// Points consumed by one minimal solver call.
constexpr int minimal_sample_size(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLine2D: return 2;
    case ProblemKind::kHomography: return 4;
    case ProblemKind::kFundamentalMatrix: return 7;
  }
  return 0;
}

// Smallest inlier set a least-squares refit accepts.
constexpr int nonminimal_fit_size(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLine2D: return 2;
    case ProblemKind::kHomography: return 4;
    case ProblemKind::kFundamentalMatrix: return 8;
  }
  return 0;
}

const char* problem_name(ProblemKind problem);
std::optional<ProblemKind> problem_from_name(const std::string& name);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point correspondence (u1,v1) <-> (u2,v2) in pixel coordinates, treated
// by the neighborhood structures as one point in the joint 4D space.
// gt_label: -1 marks a ground-truth outlier, values >= 0 identify a
// ground-truth structure, absent means unknown. quality is a prior inlier
// likelihood in [0,1]; 1.0 when nothing is known.
struct Correspondence {
  double u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  std::optional<int> gt_label;
  double quality = 1.0;
};

struct ImageSizes {
  double w1 = 0, h1 = 0, w2 = 0, h2 = 0;
  bool declared() const { return w1 > 0 && h1 > 0 && w2 > 0 && h2 > 0; }
};

// Immutable, index-stable point container. Every other module refers to
// correspondences by their index in this container.
class DataSet {
 public:
  DataSet() = default;
  DataSet(std::vector<Correspondence> points, ImageSizes sizes)
      : points_(std::move(points)), sizes_(sizes) {}

  int size() const { return static_cast<int>(points_.size()); }
  const Correspondence& operator[](int i) const { return points_[i]; }
  const std::vector<Correspondence>& points() const { return points_; }
  const ImageSizes& image_sizes() const { return sizes_; }

 private:
  std::vector<Correspondence> points_;
  ImageSizes sizes_;
};

// Model parameters. Line2D keeps (a, b, c) in row 0 of `params` with
// a*u + b*v + c = 0 and a^2 + b^2 = 1. Homographies and fundamental
// matrices use the full 3x3 matrix, scaled to unit Frobenius norm with the
// largest-magnitude entry positive.
struct Model {
  ProblemKind kind = ProblemKind::kLine2D;
  Eigen::Matrix3d params = Eigen::Matrix3d::Zero();

  Eigen::Vector3d line() const { return params.row(0).transpose(); }
};

// Indices of one minimal sample; all distinct, all inside the dataset.
struct MinimalSample {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  void clear() { indices.clear(); }
  bool contains(int idx) const {
    for (int i : indices)
      if (i == idx) return true;
    return false;
  }
};

// MSAC quality of a model over a dataset: `value` accumulates the truncated
// quadratic gain max(0, tau^2 - r^2); inliers are the strictly
// sub-threshold residuals.
struct Score {
  double value = 0.0;
  int inlier_count = 0;
  std::vector<int> inlier_indices;
};

}  // namespace pnapsac
