#include "gridsym/burnside.hpp"

#include "doctest.h"
#include "gridsym/errors.hpp"
#include "gridsym/partitions.hpp"

using namespace gridsym;

TEST_CASE("fixed counts by cycle decomposition") {
  CHECK(fixed_count(Symmetry::R0, 6, 6, 7) == binomial(36, 7));
  CHECK(fixed_count(Symmetry::R90, 6, 6, 8).to_u64() == 36);  // C(9,2)
  CHECK(fixed_count(Symmetry::H, 3, 3, 2).to_u64() == 6);
  CHECK(fixed_count(Symmetry::R90, 6, 6, 7).is_zero());  // 4 does not divide 7
  CHECK(fixed_count(Symmetry::R180, 1, 4, 1).is_zero());
  CHECK(fixed_count(Symmetry::R180, 1, 5, 1).to_u64() == 1);  // the center cell
  CHECK_THROWS_AS(fixed_count(Symmetry::D, 2, 3, 1), DimensionError);
}

TEST_CASE("orbit counts: brute force, Burnside, closed forms agree on small boards") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int r = 0; r <= m * n; ++r) {
        BigUint generic = orbit_count(m, n, r);
        CHECK(generic == orbit_count_closed_form(m, n, r));
        CHECK(generic.to_u64() == brute_force_orbit_count(m, n, r));
      }
    }
  }
}

TEST_CASE("closed forms match the generic count across all parity cases") {
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= 9; ++n)
      for (int r = 0; r <= m * n; ++r)
        CHECK(orbit_count(m, n, r) == orbit_count_closed_form(m, n, r));
}

TEST_CASE("worked-example class counts") {
  CHECK(orbit_count(3, 3, 2).to_u64() == 8);
  CHECK(orbit_count(6, 6, 7).to_u64() == 1044690);
  CHECK(orbit_count(8, 8, 4).to_u64() == 79920);
  CHECK(orbit_count_closed_form(5, 7, 5).to_u64() == 81648);
  CHECK(orbit_count_closed_form(5, 5, 10).to_u64() == 410170);
  CHECK(orbit_count_closed_form(6, 7, 6).to_u64() == 1312957);
  CHECK(orbit_count_closed_form(6, 8, 3).to_u64() == 4324);
  CHECK(orbit_count_closed_form(7, 6, 6) == orbit_count_closed_form(6, 7, 6));
}

TEST_CASE("orbit counts are complement-symmetric") {
  for (auto [m, n] : {std::pair{5, 5}, {4, 6}, {5, 7}, {6, 7}, {1, 8}})
    for (int r = 0; r <= m * n; ++r)
      CHECK(orbit_count(m, n, r) == orbit_count(m, n, m * n - r));
}

TEST_CASE("ratio values from the remarks") {
  CHECK(ratio(6, 8, 3).ratio.is_one());
  CHECK(ratio(4, 4, 4).ratio.scaled_rounded(2).to_u64() == 219);
  CHECK(ratio(6, 6, 4).ratio.scaled_rounded(2).to_u64() == 221);
  CHECK(ratio(4, 2, 4).ratio.scaled_rounded(2).to_u64() == 141);
  CHECK(ratio(6, 2, 4).ratio.scaled_rounded(2).to_u64() == 147);
  for (int r = 1; r <= 4; ++r) CHECK(ratio(2, 2, r).ratio.is_one());
}

TEST_CASE("canonical-representation families have ratio exactly 1") {
  // even rectangles with odd r
  for (auto [m, n] : {std::pair{4, 6}, {2, 8}, {6, 8}})
    for (int r = 1; r <= m * n; r += 2) CHECK(ratio(m, n, r).ratio.is_one());
  // single row of even length, odd r
  for (int r = 1; r <= 8; r += 2) CHECK(ratio(1, 8, r).ratio.is_one());
  // one blocker on any non-square board
  for (auto [m, n] : {std::pair{3, 5}, {4, 7}, {2, 3}, {1, 9}})
    CHECK(ratio(m, n, 1).ratio.is_one());
}

TEST_CASE("ratio reports carry consistent pieces") {
  RatioReport rep = ratio(6, 6, 7);
  CHECK(rep.reduced_size.to_u64() == 1521054);
  CHECK(rep.orbit_count.to_u64() == 1044690);
  CHECK(rep.ratio.decimal(4) == "1.4560");
  CHECK(!(rep.ratio < Ratio(BigUint{1}, BigUint{1})));
}

TEST_CASE("ratio sweeps report the conjecture checks") {
  SweepResult small = ratio_sweep(6, 6);
  CHECK(small.max_ratio_r == 4);
  REQUIRE(small.checks.size() == 1);
  CHECK(small.checks[0].pass);
  CHECK(small.checks[0].detail.find("r=4") != std::string::npos);

  SweepResult eight = ratio_sweep(8, 8);
  REQUIRE(eight.checks.size() == 5);
  for (const auto& check : eight.checks) CHECK(check.pass);

  SweepResult rect = ratio_sweep(6, 2);
  CHECK(rect.max_ratio_r == 4);
  for (const auto& check : rect.checks) CHECK(check.pass);

  SweepResult rect2 = ratio_sweep(4, 6);
  for (const auto& check : rect2.checks) CHECK(check.pass);

  CHECK_THROWS_AS(ratio_sweep(30, 30, 484), CapExceededError);
}
