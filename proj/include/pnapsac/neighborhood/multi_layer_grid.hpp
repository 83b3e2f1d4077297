#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pnapsac/types.hpp"

namespace pnapsac::neighborhood {

using CellKey = std::array<int32_t, 4>;

struct CellKeyHash {
  size_t operator()(const CellKey& key) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int32_t c : key) {
      uint64_t x = static_cast<uint64_t>(static_cast<uint32_t>(c));
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 31;
      h = (h ^ x) * 0x94d049bb133111ebull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

// One resolution level: each image axis is cut into `delta` equal bins, so a
// correspondence lands in a 4D cell. Out-of-range coordinates clamp into the
// outermost bin of their axis.
struct GridLayer {
  int delta = 1;
  std::array<double, 4> extent = {1, 1, 1, 1};  // per-axis image size
  std::unordered_map<CellKey, std::vector<int>, CellKeyHash> cells;

  CellKey cell_of(const Correspondence& c) const;
};

// Stack of progressively coarser 4D grids over a dataset. Immutable once
// built; read queries are safe to run concurrently.
class MultiLayerGrid {
 public:
  // `deltas` must be strictly decreasing and end with 1; image sizes must be
  // declared on the dataset. Throws ConfigError otherwise. The dataset must
  // outlive the grid.
  MultiLayerGrid(const DataSet& data, std::vector<int> deltas);

  static const std::vector<int>& default_deltas();

  int layer_count() const { return static_cast<int>(layers_.size()); }
  const GridLayer& layer(int index) const { return layers_[index]; }
  const DataSet& data() const { return *data_; }

  // Indices sharing `point`'s cell on layer `layer_index`, `point` included.
  const std::vector<int>& same_cell_neighbors(int layer_index,
                                              int point) const;

  // Same-cell list of the finest layer (largest delta) whose cell containing
  // `point` holds at least `required` indices. The delta = 1 layer holds
  // every point, so the query always succeeds for required <= n. Returns the
  // list together with the chosen layer index.
  std::pair<const std::vector<int>*, int> neighborhood_of_size(
      int point, int required) const;

  // The `k` nearest neighbors of `point` (excluding it) by 4D Euclidean
  // distance inside the cell chosen by neighborhood_of_size(point, k + 1),
  // closest first, distance ties broken toward the smaller index. k <= n-1.
  std::vector<int> ordered_neighbors(int point, int k) const;

  // k-th closest neighbor, 1-based; equals ordered_neighbors(point, k)[k-1].
  int kth_nearest(int point, int k) const;

  // Squared 4D distance between two correspondences.
  static double distance_sq(const Correspondence& a, const Correspondence& b);

 private:
  const DataSet* data_;
  std::vector<GridLayer> layers_;
};

}  // namespace pnapsac::neighborhood
