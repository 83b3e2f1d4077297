#include "pnapsac/samplers/uniform_sampler.hpp"

namespace pnapsac::samplers {

UniformSampler::UniformSampler(int point_count, int sample_size)
    : n_(point_count), m_(sample_size) {
  if (sample_size < 1) throw ConfigError("sample size must be positive");
  if (point_count < sample_size)
    throw ConfigError("fewer points than the sample size");
}

bool UniformSampler::draw(Rng& rng, MinimalSample& out) {
  out.clear();
  rng.draw_distinct(m_, n_, out.indices);
  return true;
}

}  // namespace pnapsac::samplers
