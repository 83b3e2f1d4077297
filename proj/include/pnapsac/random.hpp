#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace pnapsac {

// Seedable generator shared by every stochastic component. Bounded draws and
// the Gaussian are implemented here so that sequences depend only on the
// mt19937_64 stream, never on standard library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform over {0, ..., bound-1}, bound >= 1. Rejection keeps it unbiased.
  int next_below(int bound) {
    const uint64_t b = static_cast<uint64_t>(bound);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return static_cast<int>(r % b);
  }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) { return lo + next_below(hi - lo + 1); }

  double uniform_real() { return (gen_() >> 11) * 0x1.0p-53; }  // [0, 1)

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  double gaussian(double mean, double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return mean + sigma * spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform_real() - 1.0;
      v = 2.0 * uniform_real() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return mean + sigma * u * f;
  }

  // Appends `count` distinct values from {0, ..., pool_size-1} to `out`.
  // Values already in `out` before the call are not considered taken.
  void draw_distinct(int count, int pool_size, std::vector<int>& out) {
    const size_t base = out.size();
    for (int added = 0; added < count;) {
      const int candidate = next_below(pool_size);
      bool fresh = true;
      for (size_t j = base; j < out.size(); ++j) {
        if (out[j] == candidate) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        out.push_back(candidate);
        ++added;
      }
    }
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pnapsac
