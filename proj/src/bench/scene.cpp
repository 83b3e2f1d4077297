#include "pnapsac/bench/scene.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "pnapsac/random.hpp"
#include "pnapsac/scoring/scoring.hpp"
#include "pnapsac/solvers/normalization.hpp"
#include "pnapsac/solvers/solvers.hpp"

namespace pnapsac::bench {

const char* scene_name(SceneKind kind) {
  switch (kind) {
    case SceneKind::kLine2D: return "line2d";
    case SceneKind::kLocalizedH: return "localized-h";
    case SceneKind::kGlobalH: return "global-h";
    case SceneKind::kLocalizedF: return "localized-f";
    case SceneKind::kGlobalF: return "global-f";
  }
  return "unknown";
}

std::optional<SceneKind> scene_from_name(const std::string& name) {
  if (name == "line2d") return SceneKind::kLine2D;
  if (name == "localized-h") return SceneKind::kLocalizedH;
  if (name == "global-h") return SceneKind::kGlobalH;
  if (name == "localized-f") return SceneKind::kLocalizedF;
  if (name == "global-f") return SceneKind::kGlobalF;
  return std::nullopt;
}

ProblemKind scene_problem(SceneKind kind) {
  switch (kind) {
    case SceneKind::kLine2D: return ProblemKind::kLine2D;
    case SceneKind::kLocalizedH:
    case SceneKind::kGlobalH: return ProblemKind::kHomography;
    case SceneKind::kLocalizedF:
    case SceneKind::kGlobalF: return ProblemKind::kFundamentalMatrix;
  }
  return ProblemKind::kLine2D;
}

namespace {

constexpr int kGeometryAttempts = 100;
constexpr int kPointAttempts = 200;

struct Rect {
  double x0 = 0, y0 = 0, w = 0, h = 0;
};

double clamp_coord(double v, double extent) {
  return std::clamp(v, 0.0, std::nexttoward(extent, 0.0));
}

// Axis-aligned rectangle covering `extent` of the frame's area, placed at a
// random position while keeping `margin` pixels from every edge.
Rect random_cluster(Rng& rng, double w, double h, double extent,
                    double margin) {
  const double side = std::sqrt(extent);
  const double cw = std::min(side * w, w - 2 * margin);
  const double ch = std::min(side * h, h - 2 * margin);
  if (cw <= 1 || ch <= 1)
    throw ConfigError("image too small for the requested noise margin");
  Rect r;
  r.w = cw;
  r.h = ch;
  r.x0 = margin + rng.uniform_real() * (w - 2 * margin - cw);
  r.y0 = margin + rng.uniform_real() * (h - 2 * margin - ch);
  return r;
}

bool inside(double u, double v, double w, double h, double margin) {
  return u >= margin && u <= w - margin && v >= margin && v <= h - margin;
}

void add_noise_and_clamp(Correspondence& c, Rng& rng, double sigma,
                         const ImageSizes& sz) {
  if (sigma > 0) {
    c.u1 += rng.gaussian(0, sigma);
    c.v1 += rng.gaussian(0, sigma);
    c.u2 += rng.gaussian(0, sigma);
    c.v2 += rng.gaussian(0, sigma);
  }
  c.u1 = clamp_coord(c.u1, sz.w1);
  c.v1 = clamp_coord(c.v1, sz.h1);
  c.u2 = clamp_coord(c.u2, sz.w2);
  c.v2 = clamp_coord(c.v2, sz.h2);
}

std::vector<Correspondence> line_inliers(const SceneSpec& spec, Rng& rng,
                                         double margin, double extent,
                                         Model& truth) {
  const auto& sz = spec.sizes;
  for (int attempt = 0; attempt < kGeometryAttempts; ++attempt) {
    const Rect rect = random_cluster(rng, sz.w1, sz.h1, extent, margin);
    const double px = rect.x0 + rng.uniform_real() * rect.w;
    const double py = rect.y0 + rng.uniform_real() * rect.h;
    const double qx = rect.x0 + rng.uniform_real() * rect.w;
    const double qy = rect.y0 + rng.uniform_real() * rect.h;
    if (std::hypot(qx - px, qy - py) < 0.25 * std::min(rect.w, rect.h))
      continue;
    Correspondence pa, pb;
    pa.u1 = px;
    pa.v1 = py;
    pb.u1 = qx;
    pb.v1 = qy;
    const DataSet endpoints({pa, pb}, sz);
    const std::vector<int> both = {0, 1};
    const auto line = solvers::fit_line2d(endpoints, both);
    if (!line) continue;
    truth = *line;

    std::vector<Correspondence> points;
    points.reserve(spec.n_inliers);
    for (int i = 0; i < spec.n_inliers; ++i) {
      const double s = rng.uniform_real();
      Correspondence c;
      c.u1 = px + s * (qx - px);
      c.v1 = py + s * (qy - py);
      c.u2 = clamp_coord(c.u1, sz.w2);
      c.v2 = clamp_coord(c.v1, sz.h2);
      add_noise_and_clamp(c, rng, spec.noise_sigma, sz);
      c.gt_label = 0;
      points.push_back(c);
    }
    return points;
  }
  throw ConfigError("line scene generation failed: no usable segment");
}

std::vector<Correspondence> homography_inliers(const SceneSpec& spec,
                                               Rng& rng, double margin,
                                               double extent, Model& truth) {
  const auto& sz = spec.sizes;
  for (int attempt = 0; attempt < kGeometryAttempts; ++attempt) {
    const Rect rect = random_cluster(rng, sz.w1, sz.h1, extent, margin);
    const double sx[4] = {rect.x0, rect.x0 + rect.w, rect.x0 + rect.w,
                          rect.x0};
    const double sy[4] = {rect.y0, rect.y0, rect.y0 + rect.h,
                          rect.y0 + rect.h};

    // Target quad: the source corners rotated and scaled about their
    // center, re-centered inside the second frame, then jiggled per corner
    // so the map picks up a perspective component.
    const double scale = rng.uniform_real(0.80, 0.94);
    const double angle = rng.uniform_real(-0.15, 0.15);
    const double ca = std::cos(angle), sa = std::sin(angle);
    const double scx = rect.x0 + rect.w / 2, scy = rect.y0 + rect.h / 2;
    const double half_w = scale * (std::abs(ca) * rect.w + std::abs(sa) * rect.h) / 2;
    const double half_h = scale * (std::abs(sa) * rect.w + std::abs(ca) * rect.h) / 2;
    const double jig = 0.05 * scale * std::min(rect.w, rect.h);
    const double lo_x = margin + half_w + jig, hi_x = sz.w2 - margin - half_w - jig;
    const double lo_y = margin + half_h + jig, hi_y = sz.h2 - margin - half_h - jig;
    if (lo_x >= hi_x || lo_y >= hi_y) continue;
    const double tcx = rng.uniform_real(lo_x, hi_x);
    const double tcy = rng.uniform_real(lo_y, hi_y);

    std::vector<Correspondence> corners(4);
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
      const double dx = sx[k] - scx, dy = sy[k] - scy;
      corners[k].u1 = sx[k];
      corners[k].v1 = sy[k];
      corners[k].u2 =
          tcx + scale * (ca * dx - sa * dy) + rng.uniform_real(-jig, jig);
      corners[k].v2 =
          tcy + scale * (sa * dx + ca * dy) + rng.uniform_real(-jig, jig);
      if (!inside(corners[k].u2, corners[k].v2, sz.w2, sz.h2, margin))
        ok = false;
    }
    if (!ok) continue;

    const DataSet corner_set(corners, sz);
    MinimalSample all4;
    all4.indices = {0, 1, 2, 3};
    const auto h = solvers::fit_homography_4pt(corner_set, all4.indices);
    if (!h) continue;
    truth = *h;

    const Eigen::Matrix3d H = truth.params;
    std::vector<Correspondence> points;
    points.reserve(spec.n_inliers);
    bool placed_all = true;
    for (int i = 0; i < spec.n_inliers && placed_all; ++i) {
      placed_all = false;
      for (int t = 0; t < kPointAttempts; ++t) {
        Correspondence c;
        c.u1 = rect.x0 + rng.uniform_real() * rect.w;
        c.v1 = rect.y0 + rng.uniform_real() * rect.h;
        const Eigen::Vector3d mapped = H * Eigen::Vector3d(c.u1, c.v1, 1.0);
        if (std::abs(mapped.z()) < 1e-12) continue;
        c.u2 = mapped.x() / mapped.z();
        c.v2 = mapped.y() / mapped.z();
        if (!inside(c.u2, c.v2, sz.w2, sz.h2, margin)) continue;
        add_noise_and_clamp(c, rng, spec.noise_sigma, sz);
        c.gt_label = 0;
        points.push_back(c);
        placed_all = true;
        break;
      }
    }
    if (placed_all) return points;
  }
  throw ConfigError("homography scene generation failed: no usable warp");
}

std::vector<Correspondence> fundamental_inliers(const SceneSpec& spec,
                                                Rng& rng, double margin,
                                                double extent, Model& truth) {
  const auto& sz = spec.sizes;
  const double f1 = std::max(sz.w1, sz.h1);
  const double f2 = std::max(sz.w2, sz.h2);
  Eigen::Matrix3d k1 = Eigen::Matrix3d::Identity();
  k1(0, 0) = k1(1, 1) = f1;
  k1(0, 2) = sz.w1 / 2;
  k1(1, 2) = sz.h1 / 2;
  Eigen::Matrix3d k2 = Eigen::Matrix3d::Identity();
  k2(0, 0) = k2(1, 1) = f2;
  k2(0, 2) = sz.w2 / 2;
  k2(1, 2) = sz.h2 / 2;
  const Eigen::Matrix3d k1_inv = k1.inverse();

  for (int attempt = 0; attempt < kGeometryAttempts; ++attempt) {
    const Rect rect = random_cluster(rng, sz.w1, sz.h1, extent, margin);

    const double ax = rng.uniform_real(-0.08, 0.08);
    const double ay = rng.uniform_real(-0.08, 0.08);
    const double az = rng.uniform_real(-0.08, 0.08);
    const Eigen::Matrix3d rot =
        (Eigen::AngleAxisd(az, Eigen::Vector3d::UnitZ()) *
         Eigen::AngleAxisd(ay, Eigen::Vector3d::UnitY()) *
         Eigen::AngleAxisd(ax, Eigen::Vector3d::UnitX()))
            .toRotationMatrix();
    Eigen::Vector3d t(rng.uniform_real(0.6, 1.2), rng.uniform_real(-0.2, 0.2),
                      rng.uniform_real(-0.1, 0.1));
    if (rng.next_below(2) == 1) t.x() = -t.x();

    std::vector<Correspondence> points;
    points.reserve(spec.n_inliers);
    bool placed_all = true;
    for (int i = 0; i < spec.n_inliers && placed_all; ++i) {
      placed_all = false;
      for (int trial = 0; trial < kPointAttempts; ++trial) {
        Correspondence c;
        c.u1 = rect.x0 + rng.uniform_real() * rect.w;
        c.v1 = rect.y0 + rng.uniform_real() * rect.h;
        const double depth = rng.uniform_real(4.0, 10.0);
        const Eigen::Vector3d world =
            depth * (k1_inv * Eigen::Vector3d(c.u1, c.v1, 1.0));
        const Eigen::Vector3d cam2 = rot * world + t;
        if (cam2.z() < 0.5) continue;
        const Eigen::Vector3d proj = k2 * cam2;
        c.u2 = proj.x() / proj.z();
        c.v2 = proj.y() / proj.z();
        if (!inside(c.u2, c.v2, sz.w2, sz.h2, margin)) continue;
        add_noise_and_clamp(c, rng, spec.noise_sigma, sz);
        c.gt_label = 0;
        points.push_back(c);
        placed_all = true;
        break;
      }
    }
    if (!placed_all) continue;

    Eigen::Matrix3d t_cross;
    t_cross << 0, -t.z(), t.y(), t.z(), 0, -t.x(), -t.y(), t.x(), 0;
    truth.kind = ProblemKind::kFundamentalMatrix;
    truth.params = solvers::canonicalize(k2.inverse().transpose() * t_cross *
                                         rot * k1_inv);
    return points;
  }
  throw ConfigError("two-view scene generation failed: no usable pose");
}

}  // namespace

Scene generate_scene(const SceneSpec& spec) {
  if (spec.n_inliers < 0 || spec.n_outliers < 0)
    throw ConfigError("scene point counts must be non-negative");
  if (spec.noise_sigma < 0)
    throw ConfigError("noise_sigma must be non-negative");
  if (!(spec.cluster_extent > 0 && spec.cluster_extent <= 1))
    throw ConfigError("cluster_extent must lie in (0, 1]");
  if (!spec.sizes.declared())
    throw ConfigError("scene generation needs positive image sizes");

  Rng rng(spec.seed);
  const double margin = 3 * spec.noise_sigma + 3;
  const bool global = spec.kind == SceneKind::kGlobalH ||
                      spec.kind == SceneKind::kGlobalF;
  const double extent = global ? 1.0 : spec.cluster_extent;

  Model truth;
  std::vector<Correspondence> points;
  switch (spec.kind) {
    case SceneKind::kLine2D:
      truth.kind = ProblemKind::kLine2D;
      points = line_inliers(spec, rng, margin, extent, truth);
      break;
    case SceneKind::kLocalizedH:
    case SceneKind::kGlobalH:
      truth.kind = ProblemKind::kHomography;
      points = homography_inliers(spec, rng, margin, extent, truth);
      break;
    case SceneKind::kLocalizedF:
    case SceneKind::kGlobalF:
      truth.kind = ProblemKind::kFundamentalMatrix;
      points = fundamental_inliers(spec, rng, margin, extent, truth);
      break;
  }

  for (int i = 0; i < spec.n_outliers; ++i) {
    Correspondence c;
    c.u1 = rng.uniform_real() * spec.sizes.w1;
    c.v1 = rng.uniform_real() * spec.sizes.h1;
    c.u2 = rng.uniform_real() * spec.sizes.w2;
    c.v2 = rng.uniform_real() * spec.sizes.h2;
    c.gt_label = -1;
    points.push_back(c);
  }

  const double scale = 3 * spec.noise_sigma + 3;
  for (auto& c : points) {
    const double r = scoring::residual(truth, c);
    const double q = 1.0 - r / scale + rng.gaussian(0, spec.quality_noise);
    c.quality = std::clamp(q, 0.0, 1.0);
  }

  for (int i = static_cast<int>(points.size()) - 1; i > 0; --i)
    std::swap(points[i], points[rng.next_below(i + 1)]);

  return Scene{DataSet(std::move(points), spec.sizes), truth};
}

}  // namespace pnapsac::bench
