#include "pnapsac/samplers/growth_function.hpp"

#include <algorithm>
#include <cmath>

namespace pnapsac::samplers {

namespace {

// Shared builder over pool sizes k = choose .. n. The first entry is
// budget / C(n, choose), evaluated as a product of ratios; the rest follow
// the recursion T_{k+1} = T_k * (k+1) / (k+1-choose). Direct binomials never
// appear, so large n cannot overflow.
GrowthTable build_table(int n, int sample_size, int choose, double budget) {
  GrowthTable table;
  table.n = n;
  table.sample_size = sample_size;
  table.choose = choose;
  table.budget = budget;
  table.first_k = choose;

  const int entries = n - choose + 1;
  table.t_real.resize(entries);
  table.t_int.resize(entries);

  double t = budget;
  for (int i = 0; i < choose; ++i)
    t *= static_cast<double>(choose - i) / static_cast<double>(n - i);
  table.t_real[0] = t;
  table.t_int[0] = 1;
  for (int j = 1; j < entries; ++j) {
    const int k = choose + j - 1;  // previous pool size
    const double next =
        table.t_real[j - 1] * static_cast<double>(k + 1) /
        static_cast<double>(k + 1 - choose);
    table.t_real[j] = next;
    table.t_int[j] =
        table.t_int[j - 1] +
        static_cast<long long>(std::ceil(next - table.t_real[j - 1]));
  }
  return table;
}

}  // namespace

GrowthTable build_growth_table(int n, int m, double budget) {
  if (m < 2) throw ConfigError("growth table needs sample size >= 2");
  if (n <= m) throw ConfigError("growth table needs n > m");
  if (!(budget > 0)) throw ConfigError("growth table needs a positive budget");
  return build_table(n, m, m - 1, budget);
}

GrowthTable build_prosac_growth_table(int n, int m, double budget) {
  if (m < 1) throw ConfigError("growth table needs sample size >= 1");
  if (n <= m) throw ConfigError("growth table needs n > m");
  if (!(budget > 0)) throw ConfigError("growth table needs a positive budget");
  return build_table(n, m, m, budget);
}

int growth_lookup(const GrowthTable& table, long long t) {
  const auto it =
      std::lower_bound(table.t_int.begin(), table.t_int.end(), t);
  if (it == table.t_int.end()) return table.n - 1;
  const int k = table.first_k + static_cast<int>(it - table.t_int.begin());
  return std::min(k, table.n - 1);
}

}  // namespace pnapsac::samplers
