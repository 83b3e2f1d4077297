#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "pnapsac/solvers/normalization.hpp"
#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::solvers {

namespace {

// Any three of the points (nearly) on one line, measured against the
// bounding box of the whole group.
bool has_collinear_triple(std::span<const Eigen::Vector2d> pts) {
  double lo_x = pts[0].x(), hi_x = pts[0].x();
  double lo_y = pts[0].y(), hi_y = pts[0].y();
  for (const auto& p : pts) {
    lo_x = std::min(lo_x, p.x());
    hi_x = std::max(hi_x, p.x());
    lo_y = std::min(lo_y, p.y());
    hi_y = std::max(hi_y, p.y());
  }
  const double bbox_area = (hi_x - lo_x) * (hi_y - lo_y);
  const double limit = 1e-8 * bbox_area;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const Eigen::Vector2d a = pts[j] - pts[i];
        const Eigen::Vector2d b = pts[k] - pts[i];
        const double area = 0.5 * std::abs(a.x() * b.y() - a.y() * b.x());
        if (area <= limit) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<Model> fit_homography_dlt(const DataSet& data,
                                        std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  std::vector<Eigen::Vector2d> src(n), dst(n);
  for (int i = 0; i < n; ++i) {
    const auto& c = data[indices[i]];
    src[i] = {c.u1, c.v1};
    dst[i] = {c.u2, c.v2};
  }
  const auto t1 = normalizing_transform(src);
  const auto t2 = normalizing_transform(dst);
  if (!t1 || !t2) return std::nullopt;

  Eigen::MatrixXd a(2 * n, 9);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d p = *t1 * src[i].homogeneous();
    const Eigen::Vector3d q = *t2 * dst[i].homogeneous();
    const double x = p.x(), y = p.y();
    const double xp = q.x(), yp = q.y();
    a.row(2 * i) << 0, 0, 0, -x, -y, -1, yp * x, yp * y, yp;
    a.row(2 * i + 1) << x, y, 1, 0, 0, 0, -xp * x, -xp * y, -xp;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXd h = svd.matrixV().col(8);
  Eigen::Matrix3d hn;
  hn << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);

  const Eigen::Matrix3d result = t2->inverse() * hn * *t1;
  if (!result.allFinite()) return std::nullopt;
  Model model;
  model.kind = ProblemKind::kHomography;
  model.params = canonicalize(result);
  if (std::abs(model.params.determinant()) < 1e-12) return std::nullopt;
  return model;
}

std::optional<Model> fit_homography_4pt(const DataSet& data,
                                        std::span<const int> indices) {
  std::vector<Eigen::Vector2d> src, dst;
  for (int i : indices) {
    src.push_back({data[i].u1, data[i].v1});
    dst.push_back({data[i].u2, data[i].v2});
  }
  if (has_collinear_triple(src) || has_collinear_triple(dst))
    return std::nullopt;
  return fit_homography_dlt(data, indices);
}

}  // namespace pnapsac::solvers
