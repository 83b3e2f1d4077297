#pragma once

#include "pnapsac/samplers/sampler.hpp"

namespace pnapsac::samplers {

// Plain RANSAC sampling: m distinct indices, every m-subset equally likely.
class UniformSampler final : public Sampler {
 public:
  UniformSampler(int point_count, int sample_size);

  bool draw(Rng& rng, MinimalSample& out) override;
  const char* name() const override { return "uniform"; }

 private:
  int n_;
  int m_;
};

}  // namespace pnapsac::samplers
