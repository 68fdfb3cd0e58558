#pragma once

#include <vector>

#include "topzeta/family.hpp"

namespace topzeta {

struct SweepPlan {
  long a_max = 4;
  long b_max = 4;
  long r_max = 4;
};

// All family parameter tuples with a <= a_max, b <= b_max, r <= r_max,
// gcd(a,b) = 1, (i,j,k) in {0,1}^3, root ratios 1..r. Ordered by
// (a, b, r, i, j, k).
std::vector<FamilyParams> enumerate_sweep(const SweepPlan& plan);

struct SweepOutcome {
  FamilyParams params;
  InstanceCheck check;
};

// Serial reference implementation.
std::vector<SweepOutcome> run_sweep_serial(const std::vector<FamilyParams>& instances);

// OpenMP kernel; results are written by instance index, so the outcome
// order matches the serial reference exactly.
std::vector<SweepOutcome> run_sweep_parallel(const std::vector<FamilyParams>& instances);

}  // namespace topzeta
