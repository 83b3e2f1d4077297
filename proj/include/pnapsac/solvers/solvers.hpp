#pragma once

#include <array>
#include <optional>
#include <span>

#include "pnapsac/types.hpp"

namespace pnapsac::solvers {

// Line a*u + b*v + c = 0 (unit normal) through two image-1 points; nothing
// on coincident points.
std::optional<Model> fit_line2d(const DataSet& data,
                                std::span<const int> indices);

// Total least squares line over >= 2 image-1 points.
std::optional<Model> fit_line_tls(const DataSet& data,
                                  std::span<const int> indices);

// Normalized direct linear transform over >= 4 correspondences. The minimal
// variant additionally rejects samples with any three collinear points on
// either side (triangle area under 1e-8 of the sample's bounding-box area).
std::optional<Model> fit_homography_4pt(const DataSet& data,
                                        std::span<const int> indices);
std::optional<Model> fit_homography_dlt(const DataSet& data,
                                        std::span<const int> indices);

// Seven-point fundamental matrix: 1 to 3 rank-2 candidates through all
// seven correspondences. Returns the candidate count; zero on a degenerate
// sample (null space dimension above two).
int fit_fundamental_7pt(const DataSet& data, std::span<const int> indices,
                        std::array<Model, 3>& out);

// Normalized eight-point algorithm with rank-2 projection, >= 8 points.
std::optional<Model> fit_fundamental_8pt(const DataSet& data,
                                         std::span<const int> indices);

// All listed correspondences must lie on the same side of the epipolar
// orientation: the products (e2 x x2_i) . (F x1_i) share one nonzero sign.
// Near-zero products (magnitude under 1e-12) count as violations.
bool oriented_epipolar_check(const Model& model, const DataSet& data,
                             std::span<const int> indices);

// Dispatch helpers used by the engine and the local optimizer.
int solve_minimal(const DataSet& data, const MinimalSample& sample,
                  ProblemKind problem, std::array<Model, 3>& out);
std::optional<Model> fit_nonminimal(const DataSet& data,
                                    std::span<const int> indices,
                                    ProblemKind problem);

}  // namespace pnapsac::solvers
