#pragma once

#include <map>
#include <utility>
#include <vector>

#include "topzeta/dl_zeta.hpp"
#include "topzeta/newton_polytope.hpp"
#include "topzeta/zeta_expr.hpp"

namespace topzeta {

// Parameters of the two-vertex curve family
//   f = x^i y^j z^k * prod_t (x^a y^b + lambda_t z^c),   c = a + b,
// with a, b coprime, i, j, k in {0,1}, and pairwise distinct nonzero
// root ratios lambda_1..lambda_r.
struct FamilyParams {
  long a = 1, b = 1, r = 1;
  int i = 0, j = 0, k = 0;
  std::vector<Rational> lambdas;

  FamilyParams(long a_, long b_, long r_, int i_, int j_, int k_,
               std::vector<Rational> lambdas_);

  long c() const { return a + b; }
  long d() const { return i + j + k + c() * r; }
  long m() const { return c() * i + a * k + a * c() * r; }
  long n() const { return c() * j + b * k + b * c() * r; }

  std::string to_string() const;
};

SupportedPoly family_polynomial(const FamilyParams& p);

// Local equations of the two singular points: the chart y = 1 (variables
// x, z; Newton edge normal (c,a), distance m) and the chart x = 1
// (variables y, z; edge normal (c,b), distance n).
std::pair<SupportedPoly, SupportedPoly> singular_local_equations(const FamilyParams& p);

// The four symbolic rational functions over {s,a,b,i,j,k,r}: the zeta
// function Z of the 3-variable germ, the zeta functions Z1, Z2 of the two
// singular points, and the remaining part R of the modified global zeta.
struct SymbolicQuadruple {
  ZetaExpr Z, Z1, Z2, R;
};

SymbolicQuadruple symbolic_quadruple();

// Parameter values as a substitution point for the symbolic expressions.
std::map<std::string, Rational> param_point(const FamilyParams& p);

// Fully symbolic check that the combined numerator of Z1+Z2+R is exactly
// divisible by d*s+3 and that the quotient equals Z.
bool verify_cancellation();

// Fully symbolic check that the two fan expressions of the vertex-Q
// contribution agree.
bool verify_jq_equivalence();

// The two-term pole cancellation identity
//   1/(s+alpha) - 1/(s+beta) = (beta-alpha)/((s+alpha)(s+beta))
// checked exactly on `trials` random pairs alpha != beta.
bool verify_pole_cancellation_identity(int trials, unsigned seed = 20240901);

// Partition independence of the vertex contribution: every rotation and
// reflection of the facet cycle yields the same rational function. Checks
// the family vertices of a reference instance plus randomized supports.
bool verify_partition_independence(int random_supports = 20, unsigned seed = 20240902);

struct InstanceCheck {
  bool facet_table_ok = false;
  bool zeta3_matches_symbolic = false;
  bool chart1_matches = false;
  bool chart2_matches = false;
  bool theorem3_ok = false;
  bool cancellation_pole_absent = false;
  NondegStatus nondeg = NondegStatus::Skipped;
  PoleTable poles;

  bool ok() const {
    return facet_table_ok && zeta3_matches_symbolic && chart1_matches && chart2_matches &&
           theorem3_ok && cancellation_pole_absent;
  }
};

InstanceCheck end_to_end_instance_check(const FamilyParams& p);

}  // namespace topzeta
