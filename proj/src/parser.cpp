#include "topzeta/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "topzeta/errors.hpp"

namespace topzeta {

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  BigInt read_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return BigInt(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

SupportedPoly parse_polynomial(std::string_view text,
                               std::optional<std::vector<std::string>> variables) {
  std::vector<std::string> names =
      variables.value_or(std::vector<std::string>{"x", "y", "z"});
  if (variables && (names.size() < 2 || names.size() > 3))
    throw Error("variable list must have 2 or 3 names");
  auto var_index = [&](char c) -> int {
    for (std::size_t t = 0; t < names.size(); ++t)
      if (names[t].size() == 1 && names[t][0] == c) return static_cast<int>(t);
    return -1;
  };

  Lexer lex{text};
  std::map<LatticePoint, Rational> support;
  std::size_t max_var_used = 0;
  bool first_term = true;

  if (lex.done()) throw ParseError("empty input", 0);
  while (true) {
    int sign = 1;
    if (first_term) {
      if (lex.accept('-')) sign = -1;
    } else {
      if (lex.accept('+')) {
        sign = 1;
      } else if (lex.accept('-')) {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-'", lex.pos);
      }
    }
    first_term = false;

    Rational coeff(sign);
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = lex.read_uint();
      BigInt den = 1;
      if (lex.accept('/')) den = lex.read_uint();
      if (den == 0) throw ParseError("zero denominator in coefficient", lex.pos);
      coeff = Rational(sign * num, den);
      lex.accept('*');
      if (var_index(lex.peek()) < 0)
        throw ParseError("expected a variable after the coefficient", lex.pos);
    } else if (var_index(c) < 0) {
      throw ParseError("expected a coefficient or variable", lex.pos);
    }

    LatticePoint exps(names.size(), 0);
    while (true) {
      std::size_t at = lex.pos;
      char v = lex.peek();
      int idx = var_index(v);
      if (idx < 0) throw ParseError("unknown variable", at);
      ++lex.pos;
      long long e = 1;
      if (lex.accept('^')) {
        BigInt raw = lex.read_uint();
        if (!raw.fits_slong_p()) throw ParseError("exponent too large", at);
        e = raw.get_si();
      }
      exps[static_cast<std::size_t>(idx)] += e;
      max_var_used = std::max(max_var_used, static_cast<std::size_t>(idx) + 1);
      if (!lex.accept('*')) break;
      // after '*': either another factor or (only right after a coefficient)
      // nothing else is allowed, so a variable must follow
      if (var_index(lex.peek()) < 0) throw ParseError("expected a variable after '*'", lex.pos);
    }

    auto [it, inserted] = support.emplace(exps, coeff);
    if (!inserted) it->second += coeff;

    if (lex.done()) break;
    char nxt = lex.peek();
    if (nxt != '+' && nxt != '-') throw ParseError("unexpected character", lex.pos);
  }

  for (auto it = support.begin(); it != support.end();) {
    if (it->second.is_zero())
      it = support.erase(it);
    else
      ++it;
  }
  if (support.empty()) throw ZeroPolynomialError();

  // Ambient dimension: an explicit variable list pins it; otherwise the
  // highest default variable used decides, with a floor of 2.
  std::size_t n = variables ? names.size() : std::max<std::size_t>(2, max_var_used);
  if (n < 2) n = 2;
  std::map<LatticePoint, Rational> resized;
  for (const auto& [e, c] : support) {
    LatticePoint p(e.begin(), e.begin() + static_cast<long>(std::min(n, e.size())));
    p.resize(n, 0);
    for (std::size_t t = n; t < e.size(); ++t)
      if (e[t] != 0) throw Error("internal: trimmed a used variable");
    resized.emplace(std::move(p), c);
  }
  names.resize(n);
  return SupportedPoly(static_cast<int>(n), std::move(resized), std::move(names));
}

}  // namespace topzeta
