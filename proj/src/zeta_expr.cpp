#include "topzeta/zeta_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "topzeta/errors.hpp"

namespace topzeta {

LinearFactor::LinearFactor(SparsePoly n_part, SparsePoly nu_part)
    : N(std::move(n_part)), nu(std::move(nu_part)) {
  if (N.degree_in(kSVar) > 0 || nu.degree_in(kSVar) > 0)
    throw Error("linear factor parts must be free of s");
}

LinearFactor LinearFactor::numeric(const Rational& n_part, const Rational& nu_part) {
  return LinearFactor(SparsePoly::constant(n_part), SparsePoly::constant(nu_part));
}

bool LinearFactor::is_identity() const {
  return N.is_zero() && nu.is_constant() && nu.constant_value() == Rational(1);
}

SparsePoly LinearFactor::expanded() const { return N * SparsePoly::variable(kSVar) + nu; }

std::string LinearFactor::to_string() const {
  if (N.is_zero()) return nu.to_string();
  std::ostringstream os;
  if (N.is_constant()) {
    Rational c = N.constant_value();
    if (c == Rational(1))
      os << "s";
    else
      os << c.to_string() << "*s";
  } else {
    os << "(" << N.to_string() << ")*s";
  }
  if (!nu.is_zero()) {
    std::string t = nu.to_string();
    os << (t.front() == '-' ? "" : "+") << t;
  }
  return os.str();
}

FactorList sorted_factors(FactorList f) {
  std::sort(f.begin(), f.end());
  return f;
}

FactorList multiset_union_max(const FactorList& a, const FactorList& b) {
  FactorList out;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia] < b[ib]))
      out.push_back(a[ia++]);
    else if (ia == a.size() || b[ib] < a[ia])
      out.push_back(b[ib++]);
    else {
      out.push_back(a[ia]);
      ++ia;
      ++ib;
    }
  }
  return out;
}

FactorList multiset_difference(const FactorList& a, const FactorList& b) {
  FactorList out;
  std::size_t ib = 0;
  for (const auto& f : a) {
    while (ib < b.size() && b[ib] < f) ++ib;
    if (ib < b.size() && b[ib] == f) {
      ++ib;
      continue;
    }
    out.push_back(f);
  }
  return out;
}

FactorList multiset_intersection(const FactorList& a, const FactorList& b) {
  FactorList out;
  std::size_t ib = 0;
  for (const auto& f : a) {
    while (ib < b.size() && b[ib] < f) ++ib;
    if (ib < b.size() && b[ib] == f) {
      out.push_back(f);
      ++ib;
    }
  }
  return out;
}

SparsePoly factor_product(const FactorList& f) {
  SparsePoly prod = SparsePoly::constant(Rational(1));
  for (const auto& x : f) prod *= x.expanded();
  return prod;
}

ZetaTerm make_zeta_term(SparsePoly coefficient, int s_power, FactorList denominator) {
  if (s_power != 0 && s_power != 1) throw Error("zeta term s_power must be 0 or 1");
  FactorList kept;
  for (auto& f : denominator)
    if (!f.is_identity()) kept.push_back(std::move(f));
  kept = sorted_factors(std::move(kept));
  if (s_power == 1) {
    LinearFactor unit = LinearFactor::numeric(Rational(1), Rational(1));
    if (!std::binary_search(kept.begin(), kept.end(), unit,
                            [](const LinearFactor& a, const LinearFactor& b) { return a < b; }))
      throw Error("s_power = 1 requires the factor (1,1) in the denominator");
  }
  return ZetaTerm{std::move(coefficient), s_power, std::move(kept)};
}

std::string ZetaTerm::to_string() const {
  std::ostringstream os;
  std::string c = coefficient.to_string();
  bool simple_coeff = coefficient.is_constant() || coefficient.terms().size() == 1;
  if (s_power == 1) {
    if (coefficient == SparsePoly::constant(Rational(1))) {
      os << "s";
    } else if (coefficient == SparsePoly::constant(Rational(-1))) {
      os << "-s";
    } else {
      os << (simple_coeff ? c : "(" + c + ")") << "*s";
    }
  } else {
    os << (simple_coeff ? c : "(" + c + ")");
  }
  if (!denominator.empty()) {
    os << "/(";
    for (std::size_t t = 0; t < denominator.size(); ++t) {
      if (t) os << "*";
      os << "(" << denominator[t].to_string() << ")";
    }
    os << ")";
  }
  return os.str();
}

ZetaExpr& ZetaExpr::append(ZetaTerm t) {
  if (!t.coefficient.is_zero()) terms.push_back(std::move(t));
  return *this;
}

std::string ZetaExpr::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string piece = terms[t].to_string();
    if (t == 0) {
      os << piece;
    } else if (!piece.empty() && piece.front() == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

ZetaExpr concat(const ZetaExpr& a, const ZetaExpr& b) {
  ZetaExpr out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

ZetaExpr substitute_params(const ZetaExpr& z, const std::map<std::string, Rational>& point) {
  std::map<std::string, SparsePoly> repl;
  for (const auto& [name, value] : point) {
    if (name == kSVar) throw Error("cannot substitute the zeta variable s");
    repl.emplace(name, SparsePoly::constant(value));
  }
  ZetaExpr out;
  for (const auto& term : z.terms) {
    SparsePoly coeff = term.coefficient.substitute(repl);
    if (coeff.is_zero()) continue;
    FactorList denom;
    for (const auto& f : term.denominator)
      denom.emplace_back(f.N.substitute(repl), f.nu.substitute(repl));
    out.append(make_zeta_term(std::move(coeff), term.s_power, std::move(denom)));
  }
  return out;
}

std::string NormalizedRatFunc::to_string() const {
  std::ostringstream os;
  os << "(" << numerator.to_string() << ")";
  if (!denominator.empty()) {
    os << "/(";
    for (std::size_t t = 0; t < denominator.size(); ++t) {
      if (t) os << "*";
      os << "(" << denominator[t].to_string() << ")";
    }
    os << ")";
  }
  return os.str();
}

bool is_numeric(const ZetaExpr& z) {
  for (const auto& t : z.terms) {
    if (!t.coefficient.is_constant()) return false;
    for (const auto& f : t.denominator)
      if (!f.is_constant()) return false;
  }
  return true;
}

bool is_numeric(const NormalizedRatFunc& f) {
  for (const auto& v : f.numerator.vars())
    if (v != kSVar && f.numerator.degree_in(v) > 0) return false;
  for (const auto& x : f.denominator)
    if (!x.is_constant()) return false;
  return true;
}

std::optional<SparsePoly> try_divide_linear_in_s(const SparsePoly& num, const SparsePoly& N,
                                                 const SparsePoly& nu) {
  if (N.is_zero()) throw Error("division by a factor with zero s-part");
  if (num.is_zero()) return SparsePoly();
  int deg = num.degree_in(kSVar);
  std::vector<SparsePoly> c(deg + 1);
  for (int e = 0; e <= deg; ++e) c[e] = num.coeff_in(kSVar, e);
  if (deg == 0) return std::nullopt;  // nonzero constant in s is never divisible
  std::vector<SparsePoly> q(deg);
  auto top = c[deg].divide_exact(N);
  if (!top) return std::nullopt;
  q[deg - 1] = std::move(*top);
  for (int e = deg - 1; e >= 1; --e) {
    auto qe = (c[e] - nu * q[e]).divide_exact(N);
    if (!qe) return std::nullopt;
    q[e - 1] = std::move(*qe);
  }
  if (c[0] != nu * q[0]) return std::nullopt;
  SparsePoly s = SparsePoly::variable(kSVar);
  SparsePoly out;
  for (int e = 0; e < deg; ++e) out += q[e] * s.pow(e);
  return out;
}

namespace {

// Cancels common linear factors (and folds constant factors) of a numeric
// normalized function.
NormalizedRatFunc clear_common(NormalizedRatFunc f) {
  FactorList kept;
  for (std::size_t t = 0; t < f.denominator.size(); ++t) {
    const LinearFactor& x = f.denominator[t];
    if (x.N.is_zero()) {
      // Constant factor: fold into the numerator.
      Rational c = x.nu.constant_value();
      if (c.is_zero()) throw Error("zero denominator factor");
      f.numerator = c.inverse() * f.numerator;
      continue;
    }
    if (!f.numerator.is_constant()) {
      if (auto q = try_divide_linear_in_s(f.numerator, x.N, x.nu)) {
        f.numerator = std::move(*q);
        continue;
      }
    }
    kept.push_back(x);
  }
  f.denominator = std::move(kept);
  f.cleared = true;
  return f;
}

}  // namespace

NormalizedRatFunc zeta_combine(const ZetaExpr& z) {
  const bool numeric = is_numeric(z);
  if (z.terms.empty()) return NormalizedRatFunc{SparsePoly(), {}, numeric};
  FactorList lcm;
  for (const auto& t : z.terms) lcm = multiset_union_max(lcm, t.denominator);
  SparsePoly s = SparsePoly::variable(kSVar);
  SparsePoly num;
  for (const auto& t : z.terms) {
    SparsePoly part = t.coefficient;
    if (t.s_power == 1) part *= s;
    part *= factor_product(multiset_difference(lcm, t.denominator));
    num += part;
  }
  NormalizedRatFunc out{std::move(num), std::move(lcm), false};
  if (numeric) out = clear_common(std::move(out));
  return out;
}

bool ratfunc_equal(const NormalizedRatFunc& a, const NormalizedRatFunc& b) {
  FactorList common = multiset_intersection(a.denominator, b.denominator);
  SparsePoly left = a.numerator * factor_product(multiset_difference(b.denominator, common));
  SparsePoly right = b.numerator * factor_product(multiset_difference(a.denominator, common));
  return left == right;
}

bool ratfunc_equal(const ZetaExpr& a, const ZetaExpr& b) {
  return ratfunc_equal(zeta_combine(a), zeta_combine(b));
}

bool ratfunc_equal(const ZetaExpr& a, const NormalizedRatFunc& b) {
  return ratfunc_equal(zeta_combine(a), b);
}

bool ratfunc_equal(const NormalizedRatFunc& a, const ZetaExpr& b) {
  return ratfunc_equal(a, zeta_combine(b));
}

NormalizedRatFunc divide_by_linear(const NormalizedRatFunc& f, const LinearFactor& divisor) {
  if (divisor.N.is_zero()) throw Error("divide_by_linear: divisor has zero s-part");
  auto q = try_divide_linear_in_s(f.numerator, divisor.N, divisor.nu);
  if (!q) throw NotDivisibleError();
  return NormalizedRatFunc{std::move(*q), f.denominator, f.cleared};
}

PoleTable pole_table(const NormalizedRatFunc& f) {
  if (!is_numeric(f)) throw Error("pole_table requires numeric mode");
  NormalizedRatFunc g = f;
  if (!g.cleared) {
    ZetaExpr e;
    e.append(make_zeta_term(g.numerator, 0, g.denominator));
    g = zeta_combine(e);
  }
  if (g.numerator.is_zero()) return {};

  std::map<Rational, int> mult;
  for (const auto& x : g.denominator) {
    Rational n_val = x.N.constant_value();
    if (n_val.is_zero()) continue;
    Rational pole = -(x.nu.constant_value() / n_val);
    mult[pole] += 1;
  }

  PoleTable out;
  for (const auto& [pole, count] : mult) {
    // Vanishing order of the numerator at the pole, by repeated synthetic
    // division by (s - pole).
    int vanish = 0;
    SparsePoly num = g.numerator;
    SparsePoly one = SparsePoly::constant(Rational(1));
    SparsePoly minus_pole = SparsePoly::constant(-pole);
    while (!num.is_zero()) {
      auto q = try_divide_linear_in_s(num, one, minus_pole);
      if (!q) break;
      num = std::move(*q);
      ++vanish;
    }
    int order = count - vanish;
    if (order > 0) out.push_back(PoleEntry{pole, order});
  }
  std::sort(out.begin(), out.end(),
            [](const PoleEntry& a, const PoleEntry& b) { return b.pole < a.pole; });
  return out;
}

std::string to_string(const PoleTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << "s = " << t[i].pole.to_string() << " (order " << t[i].order << ")";
  }
  return t.empty() ? std::string("none") : os.str();
}

std::optional<Rational> evaluate_at(const ZetaExpr& z, const Rational& s) {
  if (!is_numeric(z)) throw Error("evaluate_at requires numeric mode");
  Rational total(0);
  for (const auto& t : z.terms) {
    Rational val = t.coefficient.constant_value();
    if (t.s_power == 1) val *= s;
    for (const auto& f : t.denominator) {
      Rational d = f.N.constant_value() * s + f.nu.constant_value();
      if (d.is_zero()) return std::nullopt;
      val /= d;
    }
    total += val;
  }
  return total;
}

std::optional<Rational> evaluate_at(const NormalizedRatFunc& f, const Rational& s) {
  if (!is_numeric(f)) throw Error("evaluate_at requires numeric mode");
  std::map<std::string, Rational> point{{kSVar, s}};
  Rational val = f.numerator.is_zero() ? Rational(0) : f.numerator.evaluate(point);
  for (const auto& x : f.denominator) {
    Rational d = x.N.constant_value() * s + x.nu.constant_value();
    if (d.is_zero()) return std::nullopt;
    val /= d;
  }
  return val;
}

}  // namespace topzeta
