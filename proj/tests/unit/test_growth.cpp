#include <doctest.h>

#include <cmath>

#include "pnapsac/samplers/growth_function.hpp"
#include "test_oracles.hpp"

using pnapsac::ConfigError;
using pnapsac::samplers::build_growth_table;
using pnapsac::samplers::build_prosac_growth_table;
using pnapsac::samplers::growth_lookup;
using pnapsac::samplers::GrowthTable;

TEST_CASE("neighborhood table matches the direct binomial form") {
  for (double budget : {1e3, 1e5}) {
    for (int m : {2, 3, 4, 7}) {
      for (int n = m + 1; n <= 30; ++n) {
        const GrowthTable table = build_growth_table(n, m, budget);
        REQUIRE(table.first_k == m - 1);
        REQUIRE(table.last_k() == n);
        for (int k = table.first_k; k <= n; ++k) {
          const double expected =
              oracles::binomial_growth(n, m - 1, budget, k);
          REQUIRE(table.real_at(k) ==
                  doctest::Approx(expected).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("recursion holds index by index") {
  for (double budget : {1e3, 1e5}) {
    for (int m : {2, 3, 4, 7}) {
      for (int n = m + 1; n <= 30; ++n) {
        const GrowthTable table = build_growth_table(n, m, budget);
        for (int k = table.first_k; k < n; ++k) {
          const double stepped = table.real_at(k) * (k + 1) /
                                 static_cast<double>(k + 2 - m);
          REQUIRE(table.real_at(k + 1) ==
                  doctest::Approx(stepped).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("integer staircase matches the ceiling construction") {
  for (double budget : {1e3, 1e5}) {
    for (int m : {2, 3, 4, 7}) {
      for (int n = m + 1; n <= 30; ++n) {
        const GrowthTable table = build_growth_table(n, m, budget);
        const auto expected = oracles::staircase(table.t_real);
        REQUIRE(table.t_int == expected);
        REQUIRE(table.int_at(table.first_k) == 1);
        for (size_t i = 1; i < table.t_int.size(); ++i)
          REQUIRE(table.t_int[i] >= table.t_int[i - 1]);
        REQUIRE(static_cast<double>(table.int_at(n)) >=
                table.real_at(n) - table.real_at(table.first_k));
      }
    }
  }
}

TEST_CASE("worked example n=10 m=3 budget=100") {
  const GrowthTable table = build_growth_table(10, 3, 100);
  // 100 * C(4,2) / C(10,2) = 100 * 6 / 45
  REQUIRE(table.real_at(4) == doctest::Approx(13.3333333333).epsilon(1e-9));
  REQUIRE(table.real_at(2) == doctest::Approx(100.0 / 45.0).epsilon(1e-9));
  REQUIRE(table.real_at(10) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("ranked-pool table uses the full sample size") {
  for (int m : {1, 2, 4, 7}) {
    const int n = 25;
    const GrowthTable table = build_prosac_growth_table(n, m, 1e4);
    REQUIRE(table.first_k == m);
    for (int k = m; k <= n; ++k)
      REQUIRE(table.real_at(k) ==
              doctest::Approx(oracles::binomial_growth(n, m, 1e4, k))
                  .epsilon(1e-9));
  }
  // m = 1 degenerates to a linear schedule
  const GrowthTable linear = build_prosac_growth_table(20, 1, 1e4);
  for (int k = 1; k <= 20; ++k)
    REQUIRE(linear.real_at(k) ==
            doctest::Approx(1e4 * k / 20.0).epsilon(1e-12));
}

TEST_CASE("growth_lookup inverts the staircase and caps at n-1") {
  const GrowthTable table = build_growth_table(40, 4, 1e4);
  for (long long t : {1LL, 2LL, 5LL, 17LL, 100LL, 2000LL}) {
    const int k = growth_lookup(table, t);
    REQUIRE(k <= table.last_k() - 1);
    if (table.int_at(k) < t) {
      // only possible when the cap kicked in
      REQUIRE(k == table.last_k() - 1);
    } else if (k > table.first_k) {
      REQUIRE(table.int_at(k - 1) < t);
    }
  }
  REQUIRE(growth_lookup(table, table.int_at(40) + 1000) == 39);
}

TEST_CASE("degenerate shapes are rejected") {
  REQUIRE_THROWS_AS(build_growth_table(4, 4, 1e3), ConfigError);
  REQUIRE_THROWS_AS(build_growth_table(10, 1, 1e3), ConfigError);
  REQUIRE_THROWS_AS(build_growth_table(10, 4, 0), ConfigError);
  REQUIRE_THROWS_AS(build_prosac_growth_table(4, 4, 1e3), ConfigError);
  REQUIRE_THROWS_AS(build_prosac_growth_table(10, 0, 1e3), ConfigError);
}
