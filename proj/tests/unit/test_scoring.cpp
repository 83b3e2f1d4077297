#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

#include "pnapsac/scoring/scoring.hpp"
#include "pnapsac/solvers/normalization.hpp"
#include "pnapsac/solvers/solvers.hpp"
#include "test_oracles.hpp"

using namespace pnapsac;

namespace {

Model line_model(double a, double b, double c) {
  Model m;
  m.kind = ProblemKind::kLine2D;
  const double norm = std::hypot(a, b);
  m.params.setZero();
  m.params.row(0) << a / norm, b / norm, c / norm;
  return m;
}

Correspondence point(double u1, double v1, double u2 = 0, double v2 = 0) {
  Correspondence c;
  c.u1 = u1;
  c.v1 = v1;
  c.u2 = u2;
  c.v2 = v2;
  return c;
}

}  // namespace

TEST_CASE("line residual is the point-to-line distance") {
  const Model vertical = line_model(1, 0, -5);  // u = 5
  REQUIRE(scoring::residual(vertical, point(8, 123)) ==
          doctest::Approx(3.0).epsilon(1e-12));
  REQUIRE(scoring::residual(vertical, point(5, -7)) ==
          doctest::Approx(0.0).epsilon(1e-12));

  const Model diagonal = line_model(1, -1, 0);  // u = v
  REQUIRE(scoring::residual(diagonal, point(1, 0)) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("homography residual matches the direct transfer computation") {
  SUBCASE("identity with a known offset") {
    Model m;
    m.kind = ProblemKind::kHomography;
    m.params = solvers::canonicalize(Eigen::Matrix3d::Identity());
    // forward maps (0,0) to (0,0), 5 pixels from (3,4); backward likewise
    REQUIRE(scoring::residual(m, point(0, 0, 3, 4)) ==
            doctest::Approx(5.0).epsilon(1e-12));
  }

  SUBCASE("random models agree with the oracle") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const auto scene = oracles::random_planar_scene(rng, 1);
      Model m;
      m.kind = ProblemKind::kHomography;
      m.params = solvers::canonicalize(scene.h);
      Correspondence c = scene.data[0];
      c.u2 += rng.gaussian(0, 2);
      c.v2 += rng.gaussian(0, 2);
      const double expected = oracles::direct_transfer_rms(m.params, c);
      REQUIRE(scoring::residual(m, c) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
  }

  SUBCASE("singular parameters score nothing") {
    Model m;
    m.kind = ProblemKind::kHomography;
    m.params.setZero();
    m.params(0, 0) = 1;  // rank 1, no inverse
    REQUIRE(std::isinf(scoring::residual(m, point(10, 10, 10, 10))));
    std::vector<Correspondence> pts{point(1, 2, 1, 2), point(5, 5, 5, 5)};
    const DataSet data(pts, {});
    const Score s = scoring::msac_score(m, data, 3.0);
    REQUIRE(s.inlier_count == 0);
    REQUIRE(s.value == 0.0);
  }
}

TEST_CASE("fundamental residual matches the direct Sampson distance") {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto scene = oracles::random_two_view_scene(rng, 1);
    Model m;
    m.kind = ProblemKind::kFundamentalMatrix;
    m.params = solvers::canonicalize(scene.f);
    Correspondence c = scene.data[0];
    c.u2 += rng.gaussian(0, 3);
    c.v2 += rng.gaussian(0, 3);
    const double expected = oracles::direct_sampson(m.params, c);
    REQUIRE(scoring::residual(m, c) ==
            doctest::Approx(expected).epsilon(1e-9));
    REQUIRE(scoring::residual(m, c) >= 0.0);
  }
}

TEST_CASE("msac accumulates the truncated quadratic gain") {
  const Model m = line_model(1, 0, 0);  // u = 0, residual = |u1|
  std::vector<Correspondence> pts{point(0.5, 0), point(1.5, 0), point(2, 0),
                                  point(10, 0)};
  const DataSet data(pts, {});
  const double tau = 2.0;
  const Score s = scoring::msac_score(m, data, tau);
  // residuals 0.5 and 1.5 are strict inliers; 2.0 sits on the boundary
  REQUIRE(s.inlier_count == 2);
  REQUIRE(s.inlier_indices == std::vector<int>{0, 1});
  REQUIRE(s.value ==
          doctest::Approx((4 - 0.25) + (4 - 2.25)).epsilon(1e-12));
}

TEST_CASE("threshold boundary is strict") {
  const Model m = line_model(1, 0, 0);
  const double tau = 1.0;
  std::vector<Correspondence> pts{point(tau, 0),
                                  point(std::nextafter(tau, 0.0), 0)};
  const DataSet data(pts, {});
  const Score s = scoring::msac_score(m, data, tau);
  REQUIRE(s.inlier_count == 1);
  REQUIRE(s.inlier_indices == std::vector<int>{1});
}

TEST_CASE("evaluator agrees with the one-shot helper") {
  Rng rng(41);
  const auto scene = oracles::random_planar_scene(rng, 50);
  Model m;
  m.kind = ProblemKind::kHomography;
  m.params = solvers::canonicalize(scene.h);
  const scoring::ResidualEvaluator eval(m);
  for (int i = 0; i < 50; ++i) {
    Correspondence c = scene.data[i];
    c.u2 += rng.gaussian(0, 1);
    REQUIRE(eval(c) ==
            doctest::Approx(scoring::residual(m, c)).epsilon(1e-12));
  }
}

TEST_CASE("inlier ratio") {
  Score s;
  s.inlier_count = 30;
  REQUIRE(scoring::inlier_ratio(s, 120) == doctest::Approx(0.25));
  REQUIRE(scoring::inlier_ratio(s, 0) == 0.0);
}
