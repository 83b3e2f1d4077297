#include "pnapsac/neighborhood/multi_layer_grid.hpp"

#include <algorithm>
#include <cmath>

namespace pnapsac::neighborhood {

namespace {

int32_t axis_bin(double value, double extent, int delta) {
  int32_t bin = static_cast<int32_t>(std::floor(value * delta / extent));
  if (bin < 0) bin = 0;
  if (bin >= delta) bin = delta - 1;
  return bin;
}

}  // namespace

CellKey GridLayer::cell_of(const Correspondence& c) const {
  return CellKey{axis_bin(c.u1, extent[0], delta),
                 axis_bin(c.v1, extent[1], delta),
                 axis_bin(c.u2, extent[2], delta),
                 axis_bin(c.v2, extent[3], delta)};
}

const std::vector<int>& MultiLayerGrid::default_deltas() {
  static const std::vector<int> deltas = {16, 8, 4, 2, 1};
  return deltas;
}

MultiLayerGrid::MultiLayerGrid(const DataSet& data, std::vector<int> deltas)
    : data_(&data) {
  if (deltas.empty()) throw ConfigError("grid needs at least one layer");
  for (size_t i = 0; i + 1 < deltas.size(); ++i) {
    if (deltas[i] <= deltas[i + 1])
      throw ConfigError("grid deltas must be strictly decreasing");
  }
  if (deltas.back() != 1) throw ConfigError("coarsest grid delta must be 1");
  if (deltas.front() < 1) throw ConfigError("grid deltas must be positive");
  const auto& sizes = data.image_sizes();
  if (!sizes.declared())
    throw ConfigError("grid requires declared image sizes");

  layers_.reserve(deltas.size());
  for (int delta : deltas) {
    GridLayer layer;
    layer.delta = delta;
    layer.extent = {sizes.w1, sizes.h1, sizes.w2, sizes.h2};
    for (int i = 0; i < data.size(); ++i)
      layer.cells[layer.cell_of(data[i])].push_back(i);
    layers_.push_back(std::move(layer));
  }
}

const std::vector<int>& MultiLayerGrid::same_cell_neighbors(int layer_index,
                                                            int point) const {
  const GridLayer& layer = layers_[layer_index];
  return layer.cells.at(layer.cell_of((*data_)[point]));
}

std::pair<const std::vector<int>*, int> MultiLayerGrid::neighborhood_of_size(
    int point, int required) const {
  for (int li = 0; li < layer_count(); ++li) {
    const auto& cell = same_cell_neighbors(li, point);
    if (static_cast<int>(cell.size()) >= required) return {&cell, li};
  }
  // Unreachable for required <= n: the delta = 1 layer holds all points.
  const int last = layer_count() - 1;
  return {&same_cell_neighbors(last, point), last};
}

double MultiLayerGrid::distance_sq(const Correspondence& a,
                                   const Correspondence& b) {
  const double du1 = a.u1 - b.u1;
  const double dv1 = a.v1 - b.v1;
  const double du2 = a.u2 - b.u2;
  const double dv2 = a.v2 - b.v2;
  return du1 * du1 + dv1 * dv1 + du2 * du2 + dv2 * dv2;
}

std::vector<int> MultiLayerGrid::ordered_neighbors(int point, int k) const {
  const auto [cell, li] = neighborhood_of_size(point, k + 1);
  (void)li;
  std::vector<int> neighbors;
  neighbors.reserve(cell->size());
  for (int idx : *cell) {
    if (idx != point) neighbors.push_back(idx);
  }
  const Correspondence& center = (*data_)[point];
  const DataSet& data = *data_;
  auto closer = [&](int a, int b) {
    const double da = distance_sq(data[a], center);
    const double db = distance_sq(data[b], center);
    if (da != db) return da < db;
    return a < b;
  };
  const size_t take = std::min<size_t>(k, neighbors.size());
  std::partial_sort(neighbors.begin(), neighbors.begin() + take,
                    neighbors.end(), closer);
  neighbors.resize(take);
  return neighbors;
}

int MultiLayerGrid::kth_nearest(int point, int k) const {
  return ordered_neighbors(point, k)[k - 1];
}

}  // namespace pnapsac::neighborhood
