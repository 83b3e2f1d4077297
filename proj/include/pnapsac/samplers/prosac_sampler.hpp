#pragma once

#include <span>
#include <vector>

#include "pnapsac/samplers/growth_function.hpp"
#include "pnapsac/samplers/sampler.hpp"

namespace pnapsac::samplers {

// Quality-ordered progressive sampling. Points are ranked by descending
// quality (ties toward the smaller index) and drawn from a prefix pool that
// widens on the growth-table schedule: draw t forces the pool's last ranked
// point into the sample and fills the rest uniformly from the prefix before
// it. Once t passes the end of the table the sampler degrades to uniform
// over all points.
class ProsacSampler final : public Sampler {
 public:
  ProsacSampler(int point_count, int sample_size,
                std::span<const double> qualities, double budget);

  bool draw(Rng& rng, MinimalSample& out) override;
  const char* name() const override { return "prosac"; }

  const std::vector<int>& ordering() const { return ordering_; }
  long long draws_so_far() const { return t_; }
  int pool_size() const { return pool_; }
  bool table_exhausted() const;
  const GrowthTable* growth() const {
    return has_table_ ? &table_ : nullptr;
  }

  static constexpr double kDefaultBudget = 100000.0;

 private:
  int n_;
  int m_;
  std::vector<int> ordering_;
  GrowthTable table_;
  bool has_table_ = false;
  long long t_ = 0;
  int pool_ = 0;
  std::vector<int> positions_;
};

}  // namespace pnapsac::samplers
