#include "pnapsac/samplers/progressive_napsac_sampler.hpp"

#include <algorithm>

namespace pnapsac::samplers {

ProgressiveNapsacSampler::ProgressiveNapsacSampler(
    const neighborhood::MultiLayerGrid& grid, int sample_size, double budget,
    CenterSelection center_selection)
    : grid_(&grid),
      n_(grid.data().size()),
      m_(sample_size),
      center_selection_(center_selection) {
  if (sample_size < 2) throw ConfigError("sample size must be >= 2");
  if (n_ < sample_size) throw ConfigError("fewer points than the sample size");

  if (n_ > m_) {
    table_ = build_growth_table(n_, m_, budget);
    has_table_ = true;
  }
  t_.assign(n_, 0);
  // Neighborhood sizes start at m so the first local pool already offers a
  // point of slack over the forced farthest neighbor; without room to grow
  // (n - 1 <= m) a point starts out saturated.
  k_.assign(n_, std::min(m_, n_ - 1));

  if (center_selection_ == CenterSelection::kProsac) {
    std::vector<double> qualities;
    qualities.reserve(n_);
    for (const auto& c : grid.data().points()) qualities.push_back(c.quality);
    center_prosac_ = std::make_unique<ProsacSampler>(n_, 1, qualities, budget);
  }
  sorted_cache_.resize(grid.layer_count());
}

const std::vector<int>& ProgressiveNapsacSampler::sorted_cell(int i,
                                                              int required) {
  const auto [cell, layer] = grid_->neighborhood_of_size(i, required);
  auto& layer_cache = sorted_cache_[layer];
  auto it = layer_cache.find(i);
  if (it != layer_cache.end()) return it->second;

  std::vector<int> sorted;
  sorted.reserve(cell->size());
  for (int idx : *cell) {
    if (idx != i) sorted.push_back(idx);
  }
  const DataSet& data = grid_->data();
  const Correspondence& center = data[i];
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    const double da = neighborhood::MultiLayerGrid::distance_sq(data[a],
                                                                center);
    const double db = neighborhood::MultiLayerGrid::distance_sq(data[b],
                                                                center);
    if (da != db) return da < db;
    return a < b;
  });
  auto [slot, inserted] = layer_cache.emplace(i, std::move(sorted));
  (void)inserted;
  return slot->second;
}

std::span<const int> ProgressiveNapsacSampler::local_neighborhood(int i,
                                                                  int k) {
  const auto& sorted = sorted_cell(i, k + 1);
  return {sorted.data(), static_cast<size_t>(k)};
}

void ProgressiveNapsacSampler::advance_if_due(int i) {
  if (has_table_ && k_[i] < n_ - 1 && t_[i] >= table_.int_at(k_[i])) ++k_[i];
}

int ProgressiveNapsacSampler::draw_sample(Rng& rng, MinimalSample& out) {
  out.clear();
  int center;
  if (center_prosac_) {
    center_prosac_->draw(rng, center_scratch_);
    center = center_scratch_.indices[0];
  } else {
    center = rng.next_below(n_);
  }

  ++t_[center];
  advance_if_due(center);

  if (saturated(center)) {
    rng.draw_distinct(m_, n_, out.indices);
    return center;
  }

  const int k = k_[center];
  const auto neighbors = local_neighborhood(center, k);
  out.indices.push_back(center);
  positions_.clear();
  rng.draw_distinct(m_ - 2, k - 1, positions_);
  for (int pos : positions_) out.indices.push_back(neighbors[pos]);
  out.indices.push_back(neighbors[k - 1]);
  return center;
}

void ProgressiveNapsacSampler::update_counters(const MinimalSample& sample,
                                               int center) {
  for (int j : sample.indices) {
    if (j == center) continue;
    bool mutual;
    if (saturated(j)) {
      mutual = true;
    } else {
      const auto neighbors = local_neighborhood(j, k_[j]);
      mutual = std::find(neighbors.begin(), neighbors.end(), center) !=
               neighbors.end();
    }
    if (mutual) {
      ++t_[j];
      advance_if_due(j);
    }
  }
}

bool ProgressiveNapsacSampler::draw(Rng& rng, MinimalSample& out) {
  const int center = draw_sample(rng, out);
  update_counters(out, center);
  return true;
}

}  // namespace pnapsac::samplers
