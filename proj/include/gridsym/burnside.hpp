#pragma once

#include <string>
#include <vector>

#include "gridsym/bigint.hpp"
#include "gridsym/symmetry.hpp"

namespace gridsym {

// Number of boards in B(m,n;r) fixed by g, counted by decomposing the cells
// into g-cycles and choosing whole cycles whose sizes sum to r.
BigUint fixed_count(Symmetry g, int m, int n, int r);

// Burnside average over the board's symmetry group; asserts divisibility.
BigUint orbit_count(int m, int n, int r);

// The case-by-case closed forms, implemented independently of orbit_count
// and cross-checked against it in the tests.
BigUint orbit_count_closed_form(int m, int n, int r);

struct RatioReport {
  int rows = 0, cols = 0, blockers = 0;
  BigUint reduced_size;   // |B-bar(m,n;r)|
  BigUint orbit_count;    // |O_G(B(m,n;r))|
  Ratio ratio;            // reduced_size / orbit_count, >= 1
};

// Redundancy ratio R(m,n;r). Also verifies R(m,n;r) = R(m,n;mn-r).
RatioReport ratio(int m, int n, int r);

struct SweepCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SweepResult {
  std::vector<RatioReport> reports;  // r = 1 .. ceil(mn/2)
  std::vector<SweepCheck> checks;
  int max_ratio_r = 0;  // r attaining the maximum ratio in the swept range
};

inline constexpr int kDefaultSweepCellCap = 484;  // 22 x 22

// Ratio table for r = 1..ceil(mn/2) plus the monotonicity checks behind the
// two conjectures: even squares decrease within each residue class of
// r mod 4 with the maximum at r = 2 for n >= 8; even rectangles have
// ratio 1 at odd r and decrease over even r (except the two small cases).
SweepResult ratio_sweep(int m, int n, int cell_cap = kDefaultSweepCellCap);

}  // namespace gridsym
