#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "pnapsac/neighborhood/multi_layer_grid.hpp"
#include "pnapsac/samplers/napsac_sampler.hpp"
#include "pnapsac/samplers/progressive_napsac_sampler.hpp"
#include "pnapsac/samplers/prosac_sampler.hpp"
#include "pnapsac/samplers/uniform_sampler.hpp"
#include "replay_oracle.hpp"
#include "test_oracles.hpp"

using namespace pnapsac;
using namespace pnapsac::samplers;
using pnapsac::neighborhood::MultiLayerGrid;

namespace {

DataSet random_dataset(Rng& rng, int n) {
  std::vector<Correspondence> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) {
    Correspondence c;
    c.u1 = rng.uniform_real(0, 640);
    c.v1 = rng.uniform_real(0, 480);
    c.u2 = rng.uniform_real(0, 640);
    c.v2 = rng.uniform_real(0, 480);
    c.quality = rng.uniform_real();
    points.push_back(c);
  }
  return DataSet(std::move(points), {640, 480, 640, 480});
}

bool all_distinct_in_range(const MinimalSample& sample, int n) {
  std::set<int> seen;
  for (int idx : sample.indices) {
    if (idx < 0 || idx >= n) return false;
    if (!seen.insert(idx).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("uniform sampler draws distinct in-range points") {
  Rng rng(1);
  UniformSampler sampler(20, 4);
  std::vector<long long> hits(20, 0);
  MinimalSample sample;
  for (int i = 0; i < 20000; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(sample.size() == 4);
    REQUIRE(all_distinct_in_range(sample, 20));
    for (int idx : sample.indices) ++hits[idx];
  }
  // every point participates at roughly the same frequency
  for (long long h : hits) {
    REQUIRE(h > 3400);
    REQUIRE(h < 4600);
  }
}

TEST_CASE("prosac ordering ranks by quality with index tie-break") {
  const std::vector<double> qualities = {0.5, 0.9, 0.5, 0.1, 0.9};
  ProsacSampler sampler(5, 2, qualities, 100);
  REQUIRE(sampler.ordering() == std::vector<int>{1, 4, 0, 2, 3});
}

TEST_CASE("prosac first draw is exactly the top-m prefix") {
  Rng rng(3);
  const int m = 4;
  std::vector<double> qualities;
  for (int i = 0; i < 30; ++i) qualities.push_back(1.0 - i * 0.01);
  ProsacSampler sampler(30, m, qualities, 1e4);
  MinimalSample sample;
  REQUIRE(sampler.draw(rng, sample));
  std::vector<int> sorted = sample.indices;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(sorted == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("prosac pool tracks the growth schedule") {
  Rng rng(9);
  const int n = 40, m = 3;
  std::vector<double> qualities;
  for (int i = 0; i < n; ++i) qualities.push_back(1.0 - i * 0.001);
  ProsacSampler sampler(n, m, qualities, 500);
  const GrowthTable* table = sampler.growth();
  REQUIRE(table != nullptr);

  MinimalSample sample;
  for (long long t = 1; t <= table->int_at(n); ++t) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(sample.size() == m);
    REQUIRE(all_distinct_in_range(sample, n));
    // smallest pool the staircase admits for this draw counter
    int expected_pool = m;
    while (expected_pool < n && table->int_at(expected_pool) < t)
      ++expected_pool;
    REQUIRE(sampler.pool_size() == expected_pool);
    // the pool's newest ranked point is forced into the sample
    REQUIRE(sample.contains(sampler.ordering()[expected_pool - 1]));
    // everything else comes from the ranked prefix
    for (int idx : sample.indices) {
      const auto pos = std::find(sampler.ordering().begin(),
                                 sampler.ordering().end(), idx) -
                       sampler.ordering().begin();
      REQUIRE(pos < expected_pool);
    }
  }
}

TEST_CASE("prosac degrades to uniform once the table is spent") {
  Rng rng(11);
  const int n = 10, m = 2;
  std::vector<double> qualities;
  for (int i = 0; i < n; ++i) qualities.push_back(1.0 - i * 0.05);
  ProsacSampler sampler(n, m, qualities, 40);
  const long long spent = sampler.growth()->int_at(n);

  MinimalSample sample;
  for (long long t = 1; t <= spent; ++t) REQUIRE(sampler.draw(rng, sample));
  REQUIRE_FALSE(sampler.table_exhausted());

  // past the table every unordered pair appears
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < 4000; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(sampler.table_exhausted());
    REQUIRE(all_distinct_in_range(sample, n));
    auto [a, b] = std::minmax(sample.indices[0], sample.indices[1]);
    seen.insert({a, b});
  }
  REQUIRE(seen.size() == 45);
}

TEST_CASE("prosac without room to grow is uniform from the start") {
  Rng rng(13);
  ProsacSampler sampler(3, 2, {}, 100);
  REQUIRE(sampler.growth() == nullptr);
  REQUIRE(sampler.table_exhausted());
  std::set<std::pair<int, int>> seen;
  MinimalSample sample;
  for (int i = 0; i < 200; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    auto [a, b] = std::minmax(sample.indices[0], sample.indices[1]);
    seen.insert({a, b});
  }
  REQUIRE(seen.size() == 3);
}

TEST_CASE("one-point prosac sweeps ranks on the linear schedule") {
  Rng rng(17);
  const int n = 10;
  std::vector<double> qualities;
  for (int i = 0; i < n; ++i) qualities.push_back(1.0 - i * 0.05);
  ProsacSampler sampler(n, 1, qualities, 100);
  const GrowthTable* table = sampler.growth();
  REQUIRE(table != nullptr);
  // T_k = 100 k / 10, so the staircase steps by 10 per rank
  for (int k = 1; k <= n; ++k)
    REQUIRE(table->int_at(k) == 1 + (k - 1) * 10);

  MinimalSample sample;
  for (long long t = 1; t <= table->int_at(n); ++t) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(sample.size() == 1);
    int expected_pool = 1;
    while (expected_pool < n && table->int_at(expected_pool) < t)
      ++expected_pool;
    // a one-point sample is always the pool's newest rank, deterministically
    REQUIRE(sample.indices[0] == sampler.ordering()[expected_pool - 1]);
  }
}

TEST_CASE("napsac samples stay inside one neighborhood") {
  Rng rng(23);
  const DataSet data = random_dataset(rng, 120);
  const MultiLayerGrid grid(data, MultiLayerGrid::default_deltas());
  NapsacSampler sampler(grid, 4, NapsacSampler::kDefaultNeighbors);

  MinimalSample sample;
  for (int i = 0; i < 2000; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(sample.size() == 4);
    REQUIRE(all_distinct_in_range(sample, 120));
    // some member is a center whose k nearest neighbors cover the rest
    bool found_center = false;
    for (int candidate : sample.indices) {
      const auto neighbors = grid.ordered_neighbors(
          candidate, NapsacSampler::kDefaultNeighbors);
      int covered = 0;
      for (int other : sample.indices) {
        if (other == candidate) continue;
        if (std::find(neighbors.begin(), neighbors.end(), other) !=
            neighbors.end())
          ++covered;
      }
      if (covered == 3) {
        found_center = true;
        break;
      }
    }
    REQUIRE(found_center);
  }
}

TEST_CASE("progressive sampler starts local and composes per the contract") {
  Rng rng(29);
  const DataSet data = random_dataset(rng, 150);
  const MultiLayerGrid grid(data, MultiLayerGrid::default_deltas());
  const int m = 4;
  ProgressiveNapsacSampler sampler(grid, m, 1e4, CenterSelection::kUniform);

  REQUIRE(sampler.hits() == std::vector<long long>(150, 0));
  REQUIRE(sampler.neighborhood_sizes() == std::vector<int>(150, m));

  auto state = oracles::replay_init(150, m);
  MinimalSample sample;
  for (int draw = 0; draw < 5000; ++draw) {
    const int center = sampler.draw_sample(rng, sample);
    oracles::replay_bump(state, sampler.growth(), 150, center);

    REQUIRE(sample.size() == m);
    REQUIRE(all_distinct_in_range(sample, 150));
    const int k = state.sizes[center];
    if (k < 149) {
      REQUIRE(sample.indices[0] == center);
      const auto neighbors = grid.ordered_neighbors(center, k);
      // the k-th nearest neighbor is forced in
      REQUIRE(sample.contains(neighbors[k - 1]));
      // everyone else lies within the k nearest
      for (int idx : sample.indices) {
        if (idx == center) continue;
        REQUIRE(std::find(neighbors.begin(), neighbors.end(), idx) !=
                neighbors.end());
      }
    }

    oracles::replay_members(state, grid, sampler.growth(), center, sample);
    sampler.update_counters(sample, center);
    REQUIRE(sampler.hits() == state.hits);
    REQUIRE(sampler.neighborhood_sizes() == state.sizes);
  }
}

TEST_CASE("saturated progressive sampler is fully uniform") {
  Rng rng(31);
  const DataSet data = random_dataset(rng, 8);
  const MultiLayerGrid grid(data, MultiLayerGrid::default_deltas());
  ProgressiveNapsacSampler sampler(grid, 2, 1e5, CenterSelection::kUniform);
  for (auto& k : sampler.mutable_neighborhood_sizes()) k = 7;

  std::vector<long long> counts(28, 0);
  MinimalSample sample;
  for (int i = 0; i < 100000; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    auto [a, b] = std::minmax(sample.indices[0], sample.indices[1]);
    // unordered pair index in the 28-cell triangle
    const int cell = a * 8 - a * (a + 1) / 2 + (b - a - 1);
    ++counts[cell];
  }
  const double statistic = oracles::chi_square_statistic(counts);
  // 0.99 quantile of chi-square with 27 degrees of freedom
  REQUIRE(statistic < 46.962942124751436);
}

TEST_CASE("progressive sampler handles the no-table edge") {
  Rng rng(37);
  const DataSet data = random_dataset(rng, 4);
  const MultiLayerGrid grid(data, MultiLayerGrid::default_deltas());
  ProgressiveNapsacSampler sampler(grid, 4, 1e4, CenterSelection::kUniform);
  REQUIRE(sampler.growth() == nullptr);
  REQUIRE(sampler.saturated(0));
  MinimalSample sample;
  for (int i = 0; i < 50; ++i) {
    REQUIRE(sampler.draw(rng, sample));
    REQUIRE(all_distinct_in_range(sample, 4));
    REQUIRE(sample.size() == 4);
  }
}

TEST_CASE("quality-guided center selection prefers strong points early") {
  Rng rng(41);
  DataSet data = random_dataset(rng, 60);
  // make point 5 the clear quality leader
  std::vector<Correspondence> points = data.points();
  for (auto& c : points) c.quality = 0.1;
  points[5].quality = 1.0;
  data = DataSet(std::move(points), data.image_sizes());

  const MultiLayerGrid grid(data, MultiLayerGrid::default_deltas());
  ProgressiveNapsacSampler sampler(grid, 3, 1e4, CenterSelection::kProsac);
  MinimalSample sample;
  const int center = sampler.draw_sample(rng, sample);
  REQUIRE(center == 5);
}
