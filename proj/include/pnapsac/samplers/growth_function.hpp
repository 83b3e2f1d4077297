#pragma once

#include <vector>

#include "pnapsac/types.hpp"

namespace pnapsac::samplers {

// Expected-count table driving progressive pool growth. With a budget of
// `budget` samples, each built from one anchored point plus `choose` points
// drawn at random from a pool of size k, the expected number of samples
// fully contained in the pool is
//   T_real[k] = budget * C(k, choose) / C(n, choose),   k = choose .. n.
// T_int is the integer staircase T'_k with T'_choose = 1 and
//   T'_{k+1} = T'_k + ceil(T_real[k+1] - T_real[k]),
// which is non-decreasing and reaches the budget scale at k = n.
struct GrowthTable {
  int n = 0;
  int sample_size = 0;  // m
  int choose = 0;       // m-1 for neighborhood pools, m for ranked pools
  double budget = 0;    // T_n
  int first_k = 0;      // == choose
  std::vector<double> t_real;
  std::vector<long long> t_int;

  int last_k() const { return n; }
  double real_at(int k) const { return t_real[k - first_k]; }
  long long int_at(int k) const { return t_int[k - first_k]; }
};

// Neighborhood-growth table for sample size m: one point is the neighborhood
// center, the other m-1 come from its k nearest neighbors, so choose = m-1
// and the table runs over k = m-1 .. n. Requires n > m >= 2.
GrowthTable build_growth_table(int n, int m, double budget);

// Ranked-pool growth table for plain progressive sampling: all m points come
// from the top-k ranked prefix, so choose = m and k = m .. n. Requires
// n > m >= 1.
GrowthTable build_prosac_growth_table(int n, int m, double budget);

// Smallest k with T'_k >= t, capped at n-1 so the result is always usable as
// a neighborhood size. t >= 1.
int growth_lookup(const GrowthTable& table, long long t);

}  // namespace pnapsac::samplers
