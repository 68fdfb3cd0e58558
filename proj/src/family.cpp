#include "topzeta/family.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "topzeta/errors.hpp"
#include "topzeta/nondegeneracy.hpp"

namespace topzeta {

namespace {

long gcd_l(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

FamilyParams::FamilyParams(long a_, long b_, long r_, int i_, int j_, int k_,
                           std::vector<Rational> lambdas_)
    : a(a_), b(b_), r(r_), i(i_), j(j_), k(k_), lambdas(std::move(lambdas_)) {
  if (a < 1 || b < 1 || r < 1) throw InvalidParamsError("a, b, r must be positive");
  if (gcd_l(a, b) != 1) throw InvalidParamsError("a and b must be coprime");
  if ((i != 0 && i != 1) || (j != 0 && j != 1) || (k != 0 && k != 1))
    throw InvalidParamsError("i, j, k must be 0 or 1");
  if (static_cast<long>(lambdas.size()) != r)
    throw InvalidParamsError("need exactly r root ratios");
  for (const auto& l : lambdas)
    if (l.is_zero()) throw InvalidParamsError("root ratios must be nonzero");
  std::set<Rational> distinct(lambdas.begin(), lambdas.end());
  if (static_cast<long>(distinct.size()) != r)
    throw InvalidParamsError("root ratios must be pairwise distinct");
}

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  os << "(a,b,r,i,j,k) = (" << a << "," << b << "," << r << "," << i << "," << j << "," << k
     << "), lambda = (";
  for (std::size_t t = 0; t < lambdas.size(); ++t) {
    if (t) os << ",";
    os << lambdas[t].to_string();
  }
  os << ")";
  return os.str();
}

SupportedPoly family_polynomial(const FamilyParams& p) {
  // Multiply out prod_t (x^a y^b + lambda_t z^c) as a map on exponents, then
  // shift by the monomial x^i y^j z^k.
  std::map<LatticePoint, Rational> acc{{LatticePoint{0, 0, 0}, Rational(1)}};
  for (const auto& lambda : p.lambdas) {
    std::map<LatticePoint, Rational> next;
    for (const auto& [e, c] : acc) {
      LatticePoint e1{e[0] + p.a, e[1] + p.b, e[2]};
      LatticePoint e2{e[0], e[1], e[2] + p.c()};
      next[e1] += c;
      next[e2] += c * lambda;
    }
    acc = std::move(next);
  }
  std::map<LatticePoint, Rational> shifted;
  for (const auto& [e, c] : acc)
    shifted[LatticePoint{e[0] + p.i, e[1] + p.j, e[2] + p.k}] = c;
  return SupportedPoly(3, std::move(shifted));
}

std::pair<SupportedPoly, SupportedPoly> singular_local_equations(const FamilyParams& p) {
  std::map<LatticePoint, Rational> acc1{{LatticePoint{0, 0}, Rational(1)}};
  std::map<LatticePoint, Rational> acc2{{LatticePoint{0, 0}, Rational(1)}};
  for (const auto& lambda : p.lambdas) {
    std::map<LatticePoint, Rational> n1, n2;
    for (const auto& [e, c] : acc1) {
      n1[LatticePoint{e[0] + p.a, e[1]}] += c;
      n1[LatticePoint{e[0], e[1] + p.c()}] += c * lambda;
    }
    for (const auto& [e, c] : acc2) {
      n2[LatticePoint{e[0] + p.b, e[1]}] += c;
      n2[LatticePoint{e[0], e[1] + p.c()}] += c * lambda;
    }
    acc1 = std::move(n1);
    acc2 = std::move(n2);
  }
  std::map<LatticePoint, Rational> h1, h2;
  for (const auto& [e, c] : acc1) h1[LatticePoint{e[0] + p.i, e[1] + p.k}] = c;
  for (const auto& [e, c] : acc2) h2[LatticePoint{e[0] + p.j, e[1] + p.k}] = c;
  return {SupportedPoly(2, std::move(h1), {"x", "z"}),
          SupportedPoly(2, std::move(h2), {"y", "z"})};
}

SymbolicQuadruple symbolic_quadruple() {
  SparsePoly a = SparsePoly::variable("a");
  SparsePoly b = SparsePoly::variable("b");
  SparsePoly i = SparsePoly::variable("i");
  SparsePoly j = SparsePoly::variable("j");
  SparsePoly k = SparsePoly::variable("k");
  SparsePoly r = SparsePoly::variable("r");
  SparsePoly one = SparsePoly::constant(Rational(1));

  SparsePoly c = a + b;
  SparsePoly m = c * i + a * k + a * c * r;
  SparsePoly n = c * j + b * k + b * c * r;

  LinearFactor fm(m, a + c);   // m*s + a + c
  LinearFactor fn(n, b + c);   // n*s + b + c
  LinearFactor fi(i, one);     // i*s + 1
  LinearFactor fj(j, one);     // j*s + 1
  LinearFactor fk(k, one);     // k*s + 1
  LinearFactor f11 = LinearFactor::numeric(Rational(1), Rational(1));

  SymbolicQuadruple q;
  q.Z.append(make_zeta_term(-(c * r), 1, {f11, fm, fn}));
  q.Z.append(make_zeta_term(b, 0, {fi, fj, fn}));
  q.Z.append(make_zeta_term(a * c, 0, {fn, fm, fi}));
  q.Z.append(make_zeta_term(c * c, 0, {fk, fn, fm}));

  q.Z1.append(make_zeta_term(-r, 1, {f11, fm}));
  q.Z1.append(make_zeta_term(c, 0, {fm, fk}));
  q.Z1.append(make_zeta_term(a, 0, {fm, fi}));

  q.Z2.append(make_zeta_term(-r, 1, {f11, fn}));
  q.Z2.append(make_zeta_term(c, 0, {fn, fk}));
  q.Z2.append(make_zeta_term(b, 0, {fn, fj}));

  q.R.append(make_zeta_term(one, 0, {fi, fj}));
  return q;
}

std::map<std::string, Rational> param_point(const FamilyParams& p) {
  return {{"a", Rational(p.a)}, {"b", Rational(p.b)}, {"i", Rational(static_cast<long>(p.i))},
          {"j", Rational(static_cast<long>(p.j))}, {"k", Rational(static_cast<long>(p.k))},
          {"r", Rational(p.r)}};
}

bool verify_cancellation() {
  SymbolicQuadruple q = symbolic_quadruple();
  NormalizedRatFunc combined = zeta_combine(concat(concat(q.Z1, q.Z2), q.R));
  SparsePoly d = SparsePoly::variable("i") + SparsePoly::variable("j") +
                 SparsePoly::variable("k") +
                 (SparsePoly::variable("a") + SparsePoly::variable("b")) * SparsePoly::variable("r");
  NormalizedRatFunc quotient;
  try {
    quotient = divide_by_linear(combined, LinearFactor(d, SparsePoly::constant(Rational(3))));
  } catch (const NotDivisibleError&) {
    return false;
  }
  return ratfunc_equal(q.Z, quotient);
}

bool verify_jq_equivalence() {
  SparsePoly a = SparsePoly::variable("a");
  SparsePoly b = SparsePoly::variable("b");
  SparsePoly i = SparsePoly::variable("i");
  SparsePoly j = SparsePoly::variable("j");
  SparsePoly k = SparsePoly::variable("k");
  SparsePoly r = SparsePoly::variable("r");
  SparsePoly one = SparsePoly::constant(Rational(1));
  SparsePoly c = a + b;
  SparsePoly m = c * i + a * k + a * c * r;
  SparsePoly n = c * j + b * k + b * c * r;
  LinearFactor fm(m, a + c), fn(n, b + c), fi(i, one), fj(j, one);

  ZetaExpr lhs, rhs;
  lhs.append(make_zeta_term(b, 0, {fi, fj, fn}));
  lhs.append(make_zeta_term(a * c, 0, {fn, fm, fi}));
  rhs.append(make_zeta_term(b * c, 0, {fj, fn, fm}));
  rhs.append(make_zeta_term(a, 0, {fm, fi, fj}));
  return ratfunc_equal(lhs, rhs);
}

bool verify_pole_cancellation_identity(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 12);
  for (int t = 0; t < trials; ++t) {
    Rational alpha(num(rng), den(rng));
    Rational beta(num(rng), den(rng));
    if (alpha == beta) {
      --t;
      continue;
    }
    LinearFactor fa = LinearFactor::numeric(Rational(1), alpha);
    LinearFactor fb = LinearFactor::numeric(Rational(1), beta);
    ZetaExpr z;
    z.append(make_zeta_term(SparsePoly::constant(Rational(1)), 0, {fa}));
    z.append(make_zeta_term(SparsePoly::constant(Rational(-1)), 0, {fb}));
    NormalizedRatFunc f = zeta_combine(z);
    if (f.numerator != SparsePoly::constant(beta - alpha)) return false;
    if (!(f.denominator == FactorList{fa, fb} || f.denominator == FactorList{fb, fa}))
      return false;
  }
  return true;
}

namespace {

bool partition_independent_at(const NewtonPolytope& np, const CompactFace& vertex) {
  std::vector<int> cycle = np.order_facets_around_vertex(vertex);
  ZetaExpr reference = j_vertex_from_cycle(np, cycle);
  const std::size_t r = cycle.size();
  for (int reflect = 0; reflect < 2; ++reflect) {
    std::vector<int> variant = cycle;
    if (reflect) std::reverse(variant.begin(), variant.end());
    for (std::size_t shift = 0; shift < r; ++shift) {
      std::rotate(variant.begin(), variant.begin() + 1, variant.end());
      if (!ratfunc_equal(reference, j_vertex_from_cycle(np, variant))) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_partition_independence(int random_supports, unsigned seed) {
  // Reference instances with a four-facet vertex.
  for (const FamilyParams& p :
       {FamilyParams(2, 3, 1, 0, 0, 0, {Rational(1)}),
        FamilyParams(1, 1, 1, 1, 1, 1, {Rational(1)}),
        FamilyParams(3, 4, 2, 1, 0, 1, {Rational(1), Rational(2)})}) {
    NewtonPolytope np = build_polytope(family_polynomial(p));
    for (const auto& face : np.compact_faces) {
      if (face.dim != 0) continue;
      if (!partition_independent_at(np, face)) return false;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(0, 6);
  std::uniform_int_distribution<int> npts(3, 8);
  std::uniform_int_distribution<long> coeff(1, 9);
  int done = 0;
  while (done < random_supports) {
    std::map<LatticePoint, Rational> support;
    int count = npts(rng);
    for (int t = 0; t < count; ++t) {
      LatticePoint p{coord(rng), coord(rng), coord(rng)};
      if (p == LatticePoint{0, 0, 0}) continue;
      support[p] = Rational(coeff(rng));
    }
    if (support.empty()) continue;
    NewtonPolytope np = build_polytope(SupportedPoly(3, std::move(support)));
    for (const auto& face : np.compact_faces) {
      if (face.dim != 0) continue;
      if (!partition_independent_at(np, face)) return false;
    }
    ++done;
  }
  return true;
}

InstanceCheck end_to_end_instance_check(const FamilyParams& p) {
  InstanceCheck out;
  SupportedPoly f = family_polynomial(p);
  NewtonPolytope np = build_polytope(f);

  // Expected facet table: normals (1,0,0),(0,1,0),(0,0,1),(c,0,a),(0,c,b)
  // with (N,nu) = (i,1),(j,1),(k,1),(m,a+c),(n,b+c).
  std::set<std::tuple<std::vector<Coord>, Coord, Coord>> expected{
      {{1, 0, 0}, p.i, 1},
      {{0, 1, 0}, p.j, 1},
      {{0, 0, 1}, p.k, 1},
      {{p.c(), 0, p.a}, p.m(), p.a + p.c()},
      {{0, p.c(), p.b}, p.n(), p.b + p.c()}};
  std::set<std::tuple<std::vector<Coord>, Coord, Coord>> got;
  for (const auto& fd : np.facets) got.insert({fd.normal, fd.N, fd.nu});
  out.facet_table_ok = got == expected;

  SymbolicQuadruple q = symbolic_quadruple();
  auto point = param_point(p);
  ZetaExpr Zs = substitute_params(q.Z, point);
  ZetaExpr Z1s = substitute_params(q.Z1, point);
  ZetaExpr Z2s = substitute_params(q.Z2, point);

  ZetaExpr Z3 = zeta_local(f);
  out.zeta3_matches_symbolic = ratfunc_equal(Z3, Zs);

  auto [h1, h2] = singular_local_equations(p);
  ZetaExpr Zh1 = zeta_local(h1);
  ZetaExpr Zh2 = zeta_local(h2);
  out.chart1_matches = ratfunc_equal(Zh1, Z1s);
  out.chart2_matches = ratfunc_equal(Zh2, Z2s);

  out.theorem3_ok = theorem3_check(Z3, Zh1, Zh2);

  out.poles = pole_table(zeta_combine(Z3));
  Rational candidate(-3, p.d());
  out.cancellation_pole_absent =
      std::none_of(out.poles.begin(), out.poles.end(),
                   [&](const PoleEntry& e) { return e.pole == candidate; });

  NondegReport rep = is_nondegenerate(f);
  out.nondeg = rep.overall == FaceVerdict::Nondegenerate      ? NondegStatus::Certified
               : rep.overall == FaceVerdict::PossiblyDegenerate ? NondegStatus::Uncertified
                                                                : NondegStatus::Degenerate;
  return out;
}

}  // namespace topzeta
