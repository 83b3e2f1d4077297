#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "pnapsac/solvers/normalization.hpp"
#include "pnapsac/solvers/polynomial.hpp"
#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::solvers {

namespace {

// Row of the epipolar design matrix for x2^T F x1 = 0, F in row-major order.
template <typename Row>
void epipolar_row(Row row, const Eigen::Vector3d& x1,
                  const Eigen::Vector3d& x2) {
  row << x2.x() * x1.x(), x2.x() * x1.y(), x2.x(), x2.y() * x1.x(),
      x2.y() * x1.y(), x2.y(), x1.x(), x1.y(), 1.0;
}

Eigen::Matrix3d unvec(const Eigen::Matrix<double, 9, 1>& f) {
  Eigen::Matrix3d m;
  m << f(0), f(1), f(2), f(3), f(4), f(5), f(6), f(7), f(8);
  return m;
}

bool collect_points(const DataSet& data, std::span<const int> indices,
                    std::vector<Eigen::Vector2d>& p1,
                    std::vector<Eigen::Vector2d>& p2) {
  p1.clear();
  p2.clear();
  for (int i : indices) {
    p1.push_back({data[i].u1, data[i].v1});
    p2.push_back({data[i].u2, data[i].v2});
  }
  return true;
}

}  // namespace

int fit_fundamental_7pt(const DataSet& data, std::span<const int> indices,
                        std::array<Model, 3>& out) {
  std::vector<Eigen::Vector2d> p1, p2;
  collect_points(data, indices, p1, p2);
  const auto t1 = normalizing_transform(p1);
  const auto t2 = normalizing_transform(p2);
  if (!t1 || !t2) return 0;

  Eigen::Matrix<double, 7, 9> a;
  for (int i = 0; i < 7; ++i) {
    const Eigen::Vector3d x1 = *t1 * p1[i].homogeneous();
    const Eigen::Vector3d x2 = *t2 * p2[i].homogeneous();
    epipolar_row(a.row(i), x1, x2);
  }

  Eigen::JacobiSVD<Eigen::Matrix<double, 7, 9>> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // A wider null space means the seven points admit a two-parameter family;
  // reject the sample.
  if (sv(6) <= 1e-8 * sv(0)) return 0;
  const Eigen::Matrix3d f1 = unvec(svd.matrixV().col(7));
  const Eigen::Matrix3d f2 = unvec(svd.matrixV().col(8));

  // det(alpha*F1 + (1-alpha)*F2) is cubic in alpha; recover its
  // coefficients from four evaluations.
  auto det_at = [&](double alpha) {
    return (alpha * f1 + (1.0 - alpha) * f2).determinant();
  };
  const double d0 = det_at(0.0);
  const double d1 = det_at(1.0);
  const double dm1 = det_at(-1.0);
  const double d2 = det_at(2.0);
  const double c0 = d0;
  const double c2 = 0.5 * (d1 + dm1) - c0;
  const double s13 = 0.5 * (d1 - dm1);
  const double s14 = 0.5 * (d2 - c0 - 4.0 * c2);
  const double c3 = (s14 - s13) / 3.0;
  const double c1 = s13 - c3;

  const auto roots = solve_cubic_real(c3, c2, c1, c0);
  int count = 0;
  for (double alpha : roots) {
    if (count == 3) break;
    const Eigen::Matrix3d fn = alpha * f1 + (1.0 - alpha) * f2;
    const Eigen::Matrix3d f = t2->transpose() * fn * *t1;
    if (!f.allFinite() || f.norm() < 1e-14) continue;
    Model model;
    model.kind = ProblemKind::kFundamentalMatrix;
    model.params = canonicalize(f);
    out[count++] = model;
  }
  return count;
}

std::optional<Model> fit_fundamental_8pt(const DataSet& data,
                                         std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  std::vector<Eigen::Vector2d> p1, p2;
  collect_points(data, indices, p1, p2);
  const auto t1 = normalizing_transform(p1);
  const auto t2 = normalizing_transform(p2);
  if (!t1 || !t2) return std::nullopt;

  Eigen::MatrixXd a(n, 9);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector3d x1 = *t1 * p1[i].homogeneous();
    const Eigen::Vector3d x2 = *t2 * p2[i].homogeneous();
    epipolar_row(a.row(i), x1, x2);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(7) <= 1e-8 * sv(0)) return std::nullopt;
  Eigen::Matrix3d fn = unvec(svd.matrixV().col(8));

  // Rank-2 projection before denormalizing.
  Eigen::JacobiSVD<Eigen::Matrix3d> fsvd(
      fn, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Vector3d s = fsvd.singularValues();
  s(2) = 0;
  fn = fsvd.matrixU() * s.asDiagonal() * fsvd.matrixV().transpose();

  const Eigen::Matrix3d f = t2->transpose() * fn * *t1;
  if (!f.allFinite() || f.norm() < 1e-14) return std::nullopt;
  Model model;
  model.kind = ProblemKind::kFundamentalMatrix;
  model.params = canonicalize(f);
  return model;
}

bool oriented_epipolar_check(const Model& model, const DataSet& data,
                             std::span<const int> indices) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(model.params, Eigen::ComputeFullU);
  const Eigen::Vector3d e2 = svd.matrixU().col(2);

  int sign = 0;
  for (int i : indices) {
    const auto& c = data[i];
    const Eigen::Vector3d x1(c.u1, c.v1, 1.0);
    const Eigen::Vector3d x2(c.u2, c.v2, 1.0);
    const double s = e2.cross(x2).dot(model.params * x1);
    if (std::abs(s) < 1e-12) return false;
    const int this_sign = s > 0 ? 1 : -1;
    if (sign == 0) {
      sign = this_sign;
    } else if (sign != this_sign) {
      return false;
    }
  }
  return true;
}

int solve_minimal(const DataSet& data, const MinimalSample& sample,
                  ProblemKind problem, std::array<Model, 3>& out) {
  switch (problem) {
    case ProblemKind::kLine2D: {
      const auto model = fit_line2d(data, sample.indices);
      if (!model) return 0;
      out[0] = *model;
      return 1;
    }
    case ProblemKind::kHomography: {
      const auto model = fit_homography_4pt(data, sample.indices);
      if (!model) return 0;
      out[0] = *model;
      return 1;
    }
    case ProblemKind::kFundamentalMatrix:
      return fit_fundamental_7pt(data, sample.indices, out);
  }
  return 0;
}

std::optional<Model> fit_nonminimal(const DataSet& data,
                                    std::span<const int> indices,
                                    ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLine2D:
      return fit_line_tls(data, indices);
    case ProblemKind::kHomography:
      return fit_homography_dlt(data, indices);
    case ProblemKind::kFundamentalMatrix:
      return fit_fundamental_8pt(data, indices);
  }
  return std::nullopt;
}

}  // namespace pnapsac::solvers
