#pragma once

#include "pnapsac/random.hpp"
#include "pnapsac/types.hpp"

namespace pnapsac::samplers {

// Minimal-sample source. One draw call produces one candidate sample; a
// false return means this attempt yielded nothing usable and the caller
// should retry (the attempt still counts as an iteration).
class Sampler {
 public:
  virtual ~Sampler() = default;

  virtual bool draw(Rng& rng, MinimalSample& out) = 0;
  virtual const char* name() const = 0;
};

}  // namespace pnapsac::samplers
