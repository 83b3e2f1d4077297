#pragma once

// Independent reference implementations the test suites compare the library
// against. Everything here is written the straightforward way (direct
// formulas, brute force scans) and shares no code with the library paths it
// checks.

#include <Eigen/Core>

#include <array>
#include <vector>

#include "pnapsac/random.hpp"
#include "pnapsac/types.hpp"

namespace oracles {

// budget * C(k, choose) / C(n, choose) evaluated as a direct product.
double binomial_growth(int n, int choose, double budget, int k);

// Integer staircase over a precomputed real-valued table: first entry 1,
// then cumulative ceilings of the increments.
std::vector<long long> staircase(const std::vector<double>& t_real);

// ceil(log(1-confidence) / log(1 - (eta+gamma)^m)) with the same clamping
// contract as the library, evaluated with plain pow/log.
long long direct_required(double eta, double gamma, int m, double confidence,
                          long long min_iterations, long long max_iterations);

// 4D cell key of a correspondence on a delta-binned grid, clamped per axis.
std::array<int32_t, 4> brute_cell(const pnapsac::Correspondence& c,
                                  const std::array<double, 4>& extent,
                                  int delta);

// All indices whose cell equals point's cell at this resolution, point
// included, in index order.
std::vector<int> brute_same_cell(const pnapsac::DataSet& data, int point,
                                 int delta);

// The k nearest candidates to `center` (excluded) by 4D distance, closest
// first, ties toward the smaller index. Scans `pool`.
std::vector<int> brute_knn(const pnapsac::DataSet& data,
                           const std::vector<int>& pool, int center, int k);

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 via the companion matrix of the
// normalized polynomial (degree drops when leading coefficients vanish).
std::vector<double> companion_cubic_roots(double c3, double c2, double c1,
                                          double c0);

// First-order epipolar distance written out longhand.
double direct_sampson(const Eigen::Matrix3d& f,
                      const pnapsac::Correspondence& c);

// Root-mean-square of forward and backward transfer distances.
double direct_transfer_rms(const Eigen::Matrix3d& h,
                           const pnapsac::Correspondence& c);

// Pearson statistic against a uniform expectation over the counts.
double chi_square_statistic(const std::vector<long long>& counts);

// Frobenius distance between the canonical (unit norm, fixed sign) forms of
// two 3x3 models.
double model_distance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

// Exact synthetic instances for the solvers, free of image-bound concerns.
struct PlanarScene {
  Eigen::Matrix3d h;
  pnapsac::DataSet data;
};
PlanarScene random_planar_scene(pnapsac::Rng& rng, int n);

struct TwoViewScene {
  Eigen::Matrix3d f;
  pnapsac::DataSet data;
};
TwoViewScene random_two_view_scene(pnapsac::Rng& rng, int n);

}  // namespace oracles
