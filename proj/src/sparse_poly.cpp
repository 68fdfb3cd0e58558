#include "topzeta/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "topzeta/errors.hpp"

namespace topzeta {

int variable_rank(const std::string& name) {
  static const std::map<std::string, int> table = {
      {"s", 0}, {"a", 1}, {"b", 2}, {"i", 3}, {"j", 4}, {"k", 5}, {"r", 6},
      {"x", 7}, {"y", 8}, {"z", 9}, {"t", 10}, {"u", 11}, {"v", 12}};
  auto it = table.find(name);
  return it == table.end() ? 1000 : it->second;
}

bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

SparsePoly SparsePoly::variable(const std::string& name) {
  SparsePoly p;
  p.vars_ = {name};
  p.terms_[{1}] = Rational(1);
  return p;
}

SparsePoly SparsePoly::monomial(const Rational& c, const std::vector<std::string>& vars,
                                const ExpVec& exps) {
  if (vars.size() != exps.size()) throw Error("monomial: variable/exponent size mismatch");
  if (c.is_zero()) return SparsePoly();
  // Sort variable names into canonical order, permuting exponents alongside.
  std::vector<std::size_t> idx(vars.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t l, std::size_t r) { return variable_less(vars[l], vars[r]); });
  SparsePoly p;
  ExpVec e;
  for (std::size_t t : idx) {
    if (!p.vars_.empty() && p.vars_.back() == vars[t]) {
      e.back() += exps[t];
      continue;
    }
    p.vars_.push_back(vars[t]);
    e.push_back(exps[t]);
  }
  p.terms_[e] = c;
  return p;
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational SparsePoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

int SparsePoly::degree_in(const std::string& var) const {
  if (terms_.empty()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  std::size_t pos = it - vars_.begin();
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[pos]);
  return best;
}

SparsePoly SparsePoly::coeff_in(const std::string& var, int k) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return k == 0 ? *this : SparsePoly();
  std::size_t pos = it - vars_.begin();
  SparsePoly out;
  out.vars_ = vars_;
  out.vars_.erase(out.vars_.begin() + pos);
  for (const auto& [e, c] : terms_) {
    if (e[pos] != k) continue;
    ExpVec re = e;
    re.erase(re.begin() + pos);
    out.terms_[re] = c;
  }
  return out;
}

SparsePoly SparsePoly::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return SparsePoly();
  std::size_t pos = it - vars_.begin();
  SparsePoly out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[pos] == 0) continue;
    ExpVec re = e;
    re[pos] -= 1;
    out.terms_[re] = c * Rational(e[pos]);
  }
  out.prune();
  return out;
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& point) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t t = 0; t < vars_.size(); ++t) {
      if (e[t] == 0) continue;
      auto it = point.find(vars_[t]);
      if (it == point.end()) throw Error("evaluate: unbound variable " + vars_[t]);
      term *= it->second.pow(e[t]);
    }
    total += term;
  }
  return total;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& repl) const {
  SparsePoly out;
  for (const auto& [e, c] : terms_) {
    SparsePoly term = SparsePoly::constant(c);
    for (std::size_t t = 0; t < vars_.size(); ++t) {
      if (e[t] == 0) continue;
      auto it = repl.find(vars_[t]);
      SparsePoly base = it != repl.end() ? it->second : SparsePoly::variable(vars_[t]);
      term *= base.pow(e[t]);
    }
    out += term;
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0) throw Error("negative polynomial power");
  SparsePoly acc = SparsePoly::constant(Rational(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

void SparsePoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

SparsePoly SparsePoly::remapped(const std::vector<std::string>& new_vars) const {
  SparsePoly out;
  out.vars_ = new_vars;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t t = 0; t < vars_.size(); ++t) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[t]);
    if (it == new_vars.end()) throw Error("remapped: missing variable " + vars_[t]);
    where[t] = it - new_vars.begin();
  }
  for (const auto& [e, c] : terms_) {
    ExpVec re(new_vars.size(), 0);
    for (std::size_t t = 0; t < vars_.size(); ++t) re[where[t]] = e[t];
    out.terms_[re] = c;
  }
  return out;
}

void SparsePoly::align(const SparsePoly& a, const SparsePoly& b, SparsePoly& oa, SparsePoly& ob) {
  if (a.vars_ == b.vars_) {
    oa = a;
    ob = b;
    return;
  }
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged), variable_less);
  oa = a.remapped(merged);
  ob = b.remapped(merged);
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x, y;
  SparsePoly::align(a, b, x, y);
  for (const auto& [e, c] : y.terms_) {
    auto [it, inserted] = x.terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  x.prune();
  return x;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x, y;
  SparsePoly::align(a, b, x, y);
  SparsePoly out;
  out.vars_ = x.vars_;
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      SparsePoly::ExpVec e = ea;
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += eb[t];
      Rational prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), prod);
      if (!inserted) it->second += prod;
    }
  }
  out.prune();
  return out;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
  if (c.is_zero()) return SparsePoly();
  SparsePoly out = p;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

int SparsePoly::cmp(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly x, y;
  align(a, b, x, y);
  auto ia = x.terms_.begin(), ib = y.terms_.begin();
  for (; ia != x.terms_.end() && ib != y.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != x.terms_.end()) return 1;
  if (ib != y.terms_.end()) return -1;
  return 0;
}

namespace {

int grlex_cmp(const SparsePoly::ExpVec& a, const SparsePoly::ExpVec& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

std::pair<SparsePoly::ExpVec, Rational> SparsePoly::leading_grlex() const {
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (grlex_cmp(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return SparsePoly();
  SparsePoly r, g;
  align(*this, divisor, r, g);
  auto [eg, cg] = g.leading_grlex();
  SparsePoly q;
  q.vars_ = r.vars_;
  while (!r.is_zero()) {
    auto [er, cr] = r.leading_grlex();
    ExpVec diff(er.size());
    for (std::size_t t = 0; t < er.size(); ++t) {
      diff[t] = er[t] - eg[t];
      if (diff[t] < 0) return std::nullopt;
    }
    SparsePoly mono;
    mono.vars_ = r.vars_;
    mono.terms_[diff] = cr / cg;
    q += mono;
    r -= mono * g;
  }
  return q;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* l, const auto* r) { return grlex_cmp(l->first, r->first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    const ExpVec& e = t->first;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    bool print_coeff = !has_var || mag != Rational(1);
    if (print_coeff) os << mag.to_string();
    bool need_star = print_coeff;
    for (std::size_t t2 = 0; t2 < vars_.size(); ++t2) {
      if (e[t2] == 0) continue;
      if (need_star) os << "*";
      os << vars_[t2];
      if (e[t2] > 1) os << "^" << e[t2];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

SparsePoly bareiss_det(std::vector<std::vector<SparsePoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePoly::constant(Rational(1));
  int sign = 1;
  SparsePoly prev = SparsePoly::constant(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return SparsePoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = SparsePoly();
    }
    prev = m[k][k];
  }
  SparsePoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) return SparsePoly();
  int df = f.degree_in(var);
  int dg = g.degree_in(var);
  if (df == 0 && dg == 0) return SparsePoly::constant(Rational(1));
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);
  std::vector<SparsePoly> fc(df + 1), gc(dg + 1);
  for (int t = 0; t <= df; ++t) fc[t] = f.coeff_in(var, t);
  for (int t = 0; t <= dg; ++t) gc[t] = g.coeff_in(var, t);
  const int n = df + dg;
  std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n));
  for (int row = 0; row < dg; ++row)
    for (int t = 0; t <= df; ++t) m[row][row + df - t] = fc[t];
  for (int row = 0; row < df; ++row)
    for (int t = 0; t <= dg; ++t) m[dg + row][row + dg - t] = gc[t];
  return bareiss_det(std::move(m));
}

}  // namespace topzeta
