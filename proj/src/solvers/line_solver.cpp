#include <Eigen/Eigenvalues>

#include <cmath>

#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::solvers {

namespace {

Model line_model(double a, double b, double c) {
  // Unit normal, then a deterministic sign: largest-magnitude coefficient
  // positive.
  const double norm = std::hypot(a, b);
  a /= norm;
  b /= norm;
  c /= norm;
  double largest = a;
  if (std::abs(b) > std::abs(largest)) largest = b;
  if (std::abs(c) > std::abs(largest)) largest = c;
  if (largest < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Model model;
  model.kind = ProblemKind::kLine2D;
  model.params.row(0) << a, b, c;
  return model;
}

}  // namespace

std::optional<Model> fit_line2d(const DataSet& data,
                                std::span<const int> indices) {
  const auto& p = data[indices[0]];
  const auto& q = data[indices[1]];
  const double dx = q.u1 - p.u1;
  const double dy = q.v1 - p.v1;
  if (std::hypot(dx, dy) <= 1e-12) return std::nullopt;
  const double a = -dy;
  const double b = dx;
  const double c = -(a * p.u1 + b * p.v1);
  return line_model(a, b, c);
}

std::optional<Model> fit_line_tls(const DataSet& data,
                                  std::span<const int> indices) {
  const double count = static_cast<double>(indices.size());
  double mu = 0, mv = 0;
  for (int i : indices) {
    mu += data[i].u1;
    mv += data[i].v1;
  }
  mu /= count;
  mv /= count;

  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
  for (int i : indices) {
    const double du = data[i].u1 - mu;
    const double dv = data[i].v1 - mv;
    cov(0, 0) += du * du;
    cov(0, 1) += du * dv;
    cov(1, 1) += dv * dv;
  }
  cov(1, 0) = cov(0, 1);
  if (cov.trace() <= 1e-18) return std::nullopt;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(cov);
  const Eigen::Vector2d normal = eig.eigenvectors().col(0);
  const double c = -(normal.x() * mu + normal.y() * mv);
  return line_model(normal.x(), normal.y(), c);
}

}  // namespace pnapsac::solvers
