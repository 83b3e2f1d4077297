#pragma once

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "pnapsac/neighborhood/multi_layer_grid.hpp"
#include "pnapsac/samplers/growth_function.hpp"
#include "pnapsac/samplers/prosac_sampler.hpp"
#include "pnapsac/samplers/sampler.hpp"

namespace pnapsac::samplers {

enum class CenterSelection { kUniform, kProsac };

// Per-point progressive local-to-global sampling. Every point i keeps a hit
// counter t[i] and a neighborhood size k[i] that widens on the shared
// growth-table schedule. A draw picks a center, bumps its counter, and while
// the center's neighborhood has not yet swallowed the whole set composes the
// sample from that neighborhood: the k[i]-th nearest neighbor is always
// included, the remaining m-2 non-center points come uniformly from the
// k[i]-1 closer ones. A saturated center falls back to a fully uniform
// m-point draw. Non-center sample members whose own neighborhood contains
// the center get their counters bumped too, so mutually close points share
// sampling progress.
class ProgressiveNapsacSampler final : public Sampler {
 public:
  ProgressiveNapsacSampler(const neighborhood::MultiLayerGrid& grid,
                           int sample_size, double budget,
                           CenterSelection center_selection);

  // draw_sample followed by update_counters.
  bool draw(Rng& rng, MinimalSample& out) override;
  const char* name() const override { return "pnapsac"; }

  // Chooses the center, advances its counters, fills `out`; returns the
  // center index.
  int draw_sample(Rng& rng, MinimalSample& out);

  // Mutual-hit bookkeeping for a sample produced by draw_sample with this
  // center: every non-center member whose neighborhood contains the center
  // has its hit counter incremented and its neighborhood size advanced by
  // the same schedule.
  void update_counters(const MinimalSample& sample, int center);

  // Grid-backed ordered neighborhood S_{i,k}: the k nearest neighbors of i,
  // closest first. Valid for k <= n-1; the view stays valid until the next
  // non-const call.
  std::span<const int> local_neighborhood(int i, int k);

  bool saturated(int i) const { return k_[i] >= n_ - 1; }

  const std::vector<long long>& hits() const { return t_; }
  const std::vector<int>& neighborhood_sizes() const { return k_; }
  std::vector<long long>& mutable_hits() { return t_; }
  std::vector<int>& mutable_neighborhood_sizes() { return k_; }
  const GrowthTable* growth() const { return has_table_ ? &table_ : nullptr; }

  static constexpr double kDefaultBudget = 100000.0;

 private:
  void advance_if_due(int i);
  const std::vector<int>& sorted_cell(int i, int required);

  const neighborhood::MultiLayerGrid* grid_;
  int n_;
  int m_;
  GrowthTable table_;
  bool has_table_ = false;
  std::vector<long long> t_;
  std::vector<int> k_;
  CenterSelection center_selection_;
  std::unique_ptr<ProsacSampler> center_prosac_;
  // Per (layer, point) cache of the point's cell sorted by distance to it.
  std::vector<std::unordered_map<int, std::vector<int>>> sorted_cache_;
  MinimalSample center_scratch_;
  std::vector<int> positions_;
};

}  // namespace pnapsac::samplers
