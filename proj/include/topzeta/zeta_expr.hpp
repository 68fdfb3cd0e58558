#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topzeta/sparse_poly.hpp"

namespace topzeta {

inline const std::string kSVar = "s";

// One denominator factor N*s + nu, with N and nu free of s. In numeric mode
// both parts are constants; in symbolic mode they are polynomials in the
// family parameters. The identity factor (0,1) is never stored in a list.
struct LinearFactor {
  SparsePoly N;
  SparsePoly nu;

  LinearFactor(SparsePoly n_part, SparsePoly nu_part);
  static LinearFactor numeric(const Rational& n_part, const Rational& nu_part);

  bool is_identity() const;
  bool is_constant() const { return N.is_constant() && nu.is_constant(); }
  SparsePoly expanded() const;  // N*s + nu
  std::string to_string() const;

  friend bool operator==(const LinearFactor& a, const LinearFactor& b) {
    return a.N == b.N && a.nu == b.nu;
  }
  friend bool operator<(const LinearFactor& a, const LinearFactor& b) {
    int c = SparsePoly::cmp(a.N, b.N);
    if (c != 0) return c < 0;
    return SparsePoly::cmp(a.nu, b.nu) < 0;
  }
};

// Multiset of linear factors, kept sorted.
using FactorList = std::vector<LinearFactor>;

FactorList sorted_factors(FactorList f);
FactorList multiset_union_max(const FactorList& a, const FactorList& b);
FactorList multiset_difference(const FactorList& a, const FactorList& b);
FactorList multiset_intersection(const FactorList& a, const FactorList& b);
SparsePoly factor_product(const FactorList& f);

// One summand c * s^e / prod(N_j*s + nu_j). s_power is 0 or 1; the power 1
// only arises from the s/(s+1) prefactor, in which case (1,1) is among the
// denominator factors.
struct ZetaTerm {
  SparsePoly coefficient;
  int s_power = 0;
  FactorList denominator;

  std::string to_string() const;
};

// Builds a term: drops identity factors, sorts the denominator, checks the
// s_power invariant.
ZetaTerm make_zeta_term(SparsePoly coefficient, int s_power, FactorList denominator);

struct ZetaExpr {
  std::vector<ZetaTerm> terms;

  ZetaExpr& append(ZetaTerm t);
  std::string to_string() const;
};

ZetaExpr concat(const ZetaExpr& a, const ZetaExpr& b);

// Substitutes rational values for parameter variables (never for s); factors
// that become (0,1) are dropped, terms with zero coefficient vanish.
ZetaExpr substitute_params(const ZetaExpr& z, const std::map<std::string, Rational>& point);

// A zeta expression brought over a single factored denominator.
struct NormalizedRatFunc {
  SparsePoly numerator;
  FactorList denominator;
  bool cleared = false;

  std::string to_string() const;
};

bool is_numeric(const ZetaExpr& z);
bool is_numeric(const NormalizedRatFunc& f);

// Brings all terms over the least common multiset of denominator factors.
// Numeric mode additionally cancels common linear factors (cleared = true);
// symbolic mode never cancels (cleared = false).
NormalizedRatFunc zeta_combine(const ZetaExpr& z);

// Exact equality of values, decided by cross-multiplication.
bool ratfunc_equal(const NormalizedRatFunc& a, const NormalizedRatFunc& b);
bool ratfunc_equal(const ZetaExpr& a, const ZetaExpr& b);
bool ratfunc_equal(const ZetaExpr& a, const NormalizedRatFunc& b);
bool ratfunc_equal(const NormalizedRatFunc& a, const ZetaExpr& b);

// Synthetic division of num by N*s+nu in the variable s, with exact division
// of the parameter-polynomial coefficients. nullopt when not divisible.
std::optional<SparsePoly> try_divide_linear_in_s(const SparsePoly& num, const SparsePoly& N,
                                                 const SparsePoly& nu);

// Exact quotient; denominator multiset unchanged. Throws NotDivisibleError.
NormalizedRatFunc divide_by_linear(const NormalizedRatFunc& f, const LinearFactor& divisor);

struct PoleEntry {
  Rational pole;
  int order = 0;
  friend bool operator==(const PoleEntry& a, const PoleEntry& b) {
    return a.pole == b.pole && a.order == b.order;
  }
};
using PoleTable = std::vector<PoleEntry>;

// Poles of a numeric rational function, sorted by pole value descending.
// Orders account for numerator vanishing; non-positive orders are omitted.
PoleTable pole_table(const NormalizedRatFunc& f);

std::string to_string(const PoleTable& t);

// Evaluation at a rational s; nullopt when a denominator factor vanishes.
// Both require numeric mode.
std::optional<Rational> evaluate_at(const ZetaExpr& z, const Rational& s);
std::optional<Rational> evaluate_at(const NormalizedRatFunc& f, const Rational& s);

}  // namespace topzeta
