#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topzeta/rational.hpp"

namespace topzeta {

// Canonical variable order used everywhere: s < a < b < i < j < k < r,
// then x < y < z, then auxiliary names, then anything else alphabetically.
int variable_rank(const std::string& name);
bool variable_less(const std::string& a, const std::string& b);

// Sparse multivariate polynomial over Rational. The variable list is kept
// sorted by variable_less; term keys are exponent vectors aligned with it.
// No zero coefficient is ever stored, so two polynomials are equal iff
// their term maps agree after aligning variable sets.
class SparsePoly {
 public:
  using ExpVec = std::vector<int>;
  using TermMap = std::map<ExpVec, Rational>;

  SparsePoly() = default;  // zero
  explicit SparsePoly(const Rational& c) { if (!c.is_zero()) terms_[{}] = c; }

  static SparsePoly constant(const Rational& c) { return SparsePoly(c); }
  static SparsePoly variable(const std::string& name);
  static SparsePoly monomial(const Rational& c, const std::vector<std::string>& vars,
                             const ExpVec& exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant(); zero gives 0

  int total_degree() const;                      // -1 for the zero polynomial
  int degree_in(const std::string& var) const;   // -1 for the zero polynomial
  SparsePoly coeff_in(const std::string& var, int k) const;
  SparsePoly derivative(const std::string& var) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  SparsePoly substitute(const std::map<std::string, SparsePoly>& repl) const;

  // Exact quotient this / divisor, or nullopt when division leaves a
  // remainder. Works over any variable set (single-divisor reduction in
  // graded-lex order).
  std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const;

  SparsePoly operator-() const;
  SparsePoly pow(int e) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator*(const Rational& c, const SparsePoly& p);

  bool operator==(const SparsePoly& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const SparsePoly& o) const { return cmp(*this, o) != 0; }

  // Total order used for canonical sorting of factor lists; 0 iff equal.
  static int cmp(const SparsePoly& a, const SparsePoly& b);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  // Graded-lex descending, compact form: "30*s^2+81*s+56", "-a*b+3", "0".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  SparsePoly remapped(const std::vector<std::string>& new_vars) const;
  static void align(const SparsePoly& a, const SparsePoly& b, SparsePoly& oa, SparsePoly& ob);
  std::pair<ExpVec, Rational> leading_grlex() const;  // requires nonzero
  void prune();

  friend SparsePoly resultant(const SparsePoly&, const SparsePoly&, const std::string&);
};

inline SparsePoly operator+(const SparsePoly& a, const Rational& c) { return a + SparsePoly(c); }
inline SparsePoly operator-(const SparsePoly& a, const Rational& c) { return a - SparsePoly(c); }
inline SparsePoly operator*(const SparsePoly& p, const Rational& c) { return c * p; }

// Resultant of f and g with respect to var, eliminating var: determinant of
// the Sylvester matrix over the remaining variables (Bareiss, exact).
SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, const std::string& var);

}  // namespace topzeta
