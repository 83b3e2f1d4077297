#pragma once

#include <unordered_map>
#include <vector>

#include "pnapsac/neighborhood/multi_layer_grid.hpp"
#include "pnapsac/samplers/sampler.hpp"

namespace pnapsac::samplers {

// Fixed-neighborhood local sampling: a uniformly chosen center plus m-1
// points drawn from its k nearest neighbors. The draw fails (and the caller
// retries with a new center) when the neighborhood holds fewer than m-1
// points.
class NapsacSampler final : public Sampler {
 public:
  NapsacSampler(const neighborhood::MultiLayerGrid& grid, int sample_size,
                int k_neighbors);

  bool draw(Rng& rng, MinimalSample& out) override;
  const char* name() const override { return "napsac"; }

  static constexpr int kDefaultNeighbors = 20;

 private:
  const std::vector<int>& neighbors_of(int center);

  const neighborhood::MultiLayerGrid* grid_;
  int n_;
  int m_;
  int k_neighbors_;
  std::unordered_map<int, std::vector<int>> cache_;
  std::vector<int> positions_;
};

}  // namespace pnapsac::samplers
