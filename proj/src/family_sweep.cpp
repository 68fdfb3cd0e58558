#include "topzeta/family_sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topzeta {

namespace {

long gcd_l(long a, long b) {
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::vector<FamilyParams> enumerate_sweep(const SweepPlan& plan) {
  std::vector<FamilyParams> out;
  for (long a = 1; a <= plan.a_max; ++a)
    for (long b = 1; b <= plan.b_max; ++b) {
      if (gcd_l(a, b) != 1) continue;
      for (long r = 1; r <= plan.r_max; ++r) {
        std::vector<Rational> lambdas;
        for (long t = 1; t <= r; ++t) lambdas.emplace_back(t);
        for (int i = 0; i <= 1; ++i)
          for (int j = 0; j <= 1; ++j)
            for (int k = 0; k <= 1; ++k) out.emplace_back(a, b, r, i, j, k, lambdas);
      }
    }
  return out;
}

std::vector<SweepOutcome> run_sweep_serial(const std::vector<FamilyParams>& instances) {
  std::vector<SweepOutcome> out;
  out.reserve(instances.size());
  for (const auto& p : instances) out.push_back({p, end_to_end_instance_check(p)});
  return out;
}

std::vector<SweepOutcome> run_sweep_parallel(const std::vector<FamilyParams>& instances) {
  std::vector<SweepOutcome> out(instances.size(),
                                SweepOutcome{FamilyParams(1, 1, 1, 0, 0, 0, {Rational(1)}), {}});
  const long long count = static_cast<long long>(instances.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long idx = 0; idx < count; ++idx) {
    const FamilyParams& p = instances[static_cast<std::size_t>(idx)];
    out[static_cast<std::size_t>(idx)] = SweepOutcome{p, end_to_end_instance_check(p)};
  }
  return out;
}

}  // namespace topzeta
