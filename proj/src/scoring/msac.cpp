#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "pnapsac/scoring/scoring.hpp"

namespace pnapsac::scoring {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ResidualEvaluator::ResidualEvaluator(const Model& model)
    : kind_(model.kind), params_(model.params) {
  if (kind_ == ProblemKind::kHomography) {
    if (std::abs(params_.determinant()) < 1e-12) {
      invertible_ = false;
    } else {
      inverse_ = params_.inverse();
    }
  }
}

double ResidualEvaluator::operator()(const Correspondence& c) const {
  switch (kind_) {
    case ProblemKind::kLine2D: {
      const auto line = params_.row(0);
      return std::abs(line(0) * c.u1 + line(1) * c.v1 + line(2));
    }
    case ProblemKind::kHomography: {
      if (!invertible_) return kInf;
      const Eigen::Vector3d x1(c.u1, c.v1, 1.0);
      const Eigen::Vector3d x2(c.u2, c.v2, 1.0);
      const Eigen::Vector3d fwd = params_ * x1;
      const Eigen::Vector3d bwd = inverse_ * x2;
      if (std::abs(fwd.z()) < 1e-14 || std::abs(bwd.z()) < 1e-14) return kInf;
      const double d1 =
          (fwd.hnormalized() - x2.head<2>()).squaredNorm();
      const double d2 =
          (bwd.hnormalized() - x1.head<2>()).squaredNorm();
      return std::sqrt(0.5 * (d1 + d2));
    }
    case ProblemKind::kFundamentalMatrix: {
      const Eigen::Vector3d x1(c.u1, c.v1, 1.0);
      const Eigen::Vector3d x2(c.u2, c.v2, 1.0);
      const Eigen::Vector3d l = params_ * x1;
      const Eigen::Vector3d lt = params_.transpose() * x2;
      const double e = x2.dot(l);
      const double denom =
          l.x() * l.x() + l.y() * l.y() + lt.x() * lt.x() + lt.y() * lt.y();
      if (denom < 1e-300) return e == 0 ? 0.0 : kInf;
      return std::abs(e) / std::sqrt(denom);
    }
  }
  return kInf;
}

double residual(const Model& model, const Correspondence& c) {
  return ResidualEvaluator(model)(c);
}

Score msac_score(const Model& model, const DataSet& data, double tau) {
  const ResidualEvaluator evaluate(model);
  const double tau_sq = tau * tau;
  Score score;
  for (int i = 0; i < data.size(); ++i) {
    const double r = evaluate(data[i]);
    if (r < tau) {
      score.value += tau_sq - r * r;
      score.inlier_indices.push_back(i);
    }
  }
  score.inlier_count = static_cast<int>(score.inlier_indices.size());
  return score;
}

double inlier_ratio(const Score& score, int point_count) {
  if (point_count <= 0) return 0.0;
  return static_cast<double>(score.inlier_count) /
         static_cast<double>(point_count);
}

}  // namespace pnapsac::scoring
