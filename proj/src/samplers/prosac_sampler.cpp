#include "pnapsac/samplers/prosac_sampler.hpp"

#include <algorithm>
#include <numeric>

namespace pnapsac::samplers {

ProsacSampler::ProsacSampler(int point_count, int sample_size,
                             std::span<const double> qualities, double budget)
    : n_(point_count), m_(sample_size) {
  if (sample_size < 1) throw ConfigError("sample size must be positive");
  if (point_count < sample_size)
    throw ConfigError("fewer points than the sample size");
  if (!qualities.empty() && static_cast<int>(qualities.size()) != point_count)
    throw ConfigError("quality count does not match point count");

  ordering_.resize(point_count);
  std::iota(ordering_.begin(), ordering_.end(), 0);
  if (!qualities.empty()) {
    std::sort(ordering_.begin(), ordering_.end(), [&](int a, int b) {
      if (qualities[a] != qualities[b]) return qualities[a] > qualities[b];
      return a < b;
    });
  }

  // The ranked pool runs over sizes m .. n; with n <= m+1 there is nothing
  // to grow through and the sampler starts out saturated.
  if (n_ > m_ + 1) {
    table_ = build_prosac_growth_table(n_, m_, budget);
    has_table_ = true;
  }
  pool_ = m_;
}

bool ProsacSampler::table_exhausted() const {
  return !has_table_ || t_ > table_.int_at(table_.last_k());
}

bool ProsacSampler::draw(Rng& rng, MinimalSample& out) {
  out.clear();
  ++t_;
  if (table_exhausted()) {
    rng.draw_distinct(m_, n_, out.indices);
    return true;
  }
  while (pool_ < n_ && table_.int_at(pool_) < t_) ++pool_;
  // The pool's newest point is always in the sample; the remainder comes
  // uniformly from the ranked prefix before it.
  out.indices.push_back(ordering_[pool_ - 1]);
  positions_.clear();
  rng.draw_distinct(m_ - 1, pool_ - 1, positions_);
  for (int pos : positions_) out.indices.push_back(ordering_[pos]);
  return true;
}

}  // namespace pnapsac::samplers
