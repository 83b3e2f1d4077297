#include "pnapsac/samplers/napsac_sampler.hpp"

#include <algorithm>

namespace pnapsac::samplers {

NapsacSampler::NapsacSampler(const neighborhood::MultiLayerGrid& grid,
                             int sample_size, int k_neighbors)
    : grid_(&grid),
      n_(grid.data().size()),
      m_(sample_size),
      k_neighbors_(k_neighbors) {
  if (sample_size < 2) throw ConfigError("sample size must be >= 2");
  if (k_neighbors < sample_size - 1)
    throw ConfigError("neighborhood smaller than the sample");
  if (n_ < sample_size) throw ConfigError("fewer points than the sample size");
}

const std::vector<int>& NapsacSampler::neighbors_of(int center) {
  auto it = cache_.find(center);
  if (it != cache_.end()) return it->second;
  const int k = std::min(k_neighbors_, n_ - 1);
  auto [slot, inserted] =
      cache_.emplace(center, grid_->ordered_neighbors(center, k));
  (void)inserted;
  return slot->second;
}

bool NapsacSampler::draw(Rng& rng, MinimalSample& out) {
  out.clear();
  const int center = rng.next_below(n_);
  const auto& neighbors = neighbors_of(center);
  if (static_cast<int>(neighbors.size()) < m_ - 1) return false;
  out.indices.push_back(center);
  positions_.clear();
  rng.draw_distinct(m_ - 1, static_cast<int>(neighbors.size()), positions_);
  for (int pos : positions_) out.indices.push_back(neighbors[pos]);
  return true;
}

}  // namespace pnapsac::samplers
