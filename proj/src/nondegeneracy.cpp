#include "topzeta/nondegeneracy.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "topzeta/errors.hpp"

namespace topzeta {

namespace {

Coord gcd_c(Coord a, Coord b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    Coord t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Dense univariate polynomial over Q, coefficient of t^i at index i.
using UniPoly = std::vector<Rational>;

void strip(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t t = 1; t < p.size(); ++t) d.push_back(Rational(static_cast<long>(t)) * p[t]);
  strip(d);
  return d;
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
  strip(a);
  while (deg(a) >= deg(b) && !a.empty()) {
    Rational q = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (int t = 0; t <= deg(b); ++t) a[t + shift] -= q * b[t];
    strip(a);
  }
  return a;
}

UniPoly gcd_monic(UniPoly a, UniPoly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

SparsePoly to_sparse(const UniPoly& p, const std::string& var) {
  SparsePoly out;
  SparsePoly t = SparsePoly::variable(var);
  for (std::size_t e = 0; e < p.size(); ++e)
    if (!p[e].is_zero()) out += p[e] * t.pow(static_cast<int>(e));
  return out;
}

UniPoly from_sparse(const SparsePoly& p, const std::string& var) {
  UniPoly out;
  int d = p.degree_in(var);
  for (int e = 0; e <= d; ++e) {
    SparsePoly c = p.coeff_in(var, e);
    if (!c.is_constant()) throw Error("from_sparse: polynomial is not univariate in " + var);
    out.push_back(c.constant_value());
  }
  strip(out);
  return out;
}

// Unimodular 3x3 M with l * M = (0, 0, 1); the first two columns are a basis
// of the saturated kernel lattice of l.
struct KernelBasis {
  std::array<std::array<Coord, 3>, 3> M;  // column-major: M[col][row]
};

KernelBasis kernel_basis(const std::vector<Coord>& l) {
  KernelBasis kb;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) kb.M[c][r] = (c == r) ? 1 : 0;
  std::array<Coord, 3> v{l[0], l[1], l[2]};
  auto nonzeros = [&] {
    int c = 0;
    for (Coord x : v)
      if (x != 0) ++c;
    return c;
  };
  while (nonzeros() > 1) {
    int p = -1;
    for (int t = 0; t < 3; ++t)
      if (v[t] != 0 && (p < 0 || std::abs(v[t]) < std::abs(v[p]))) p = t;
    for (int q = 0; q < 3; ++q) {
      if (q == p || v[q] == 0) continue;
      Coord f = v[q] / v[p];
      v[q] -= f * v[p];
      for (int r = 0; r < 3; ++r) kb.M[q][r] -= f * kb.M[p][r];
    }
  }
  int p = 0;
  while (v[p] == 0) ++p;
  if (v[p] < 0) {
    v[p] = -v[p];
    for (int r = 0; r < 3; ++r) kb.M[p][r] = -kb.M[p][r];
  }
  if (v[p] != 1) throw Error("kernel_basis: normal is not primitive");
  if (p != 2) {
    std::swap(kb.M[p], kb.M[2]);
    // keep determinant irrelevant; only column roles matter
  }
  return kb;
}

// Solve M x = d for integer x, with det(M) = ±1.
std::array<Coord, 3> solve_unimodular(const KernelBasis& kb, const std::array<Coord, 3>& d) {
  auto at = [&](int r, int c) { return kb.M[c][r]; };
  Coord det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
              at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
              at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  if (det != 1 && det != -1) throw Error("solve_unimodular: matrix not unimodular");
  // adj[i][j] via the cyclic cofactor formula; x = adj * d / det.
  std::array<Coord, 3> x{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    Coord s = 0;
    for (int j = 0; j < 3; ++j) {
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      Coord adj_ij = at(j1, i1) * at(j2, i2) - at(j1, i2) * at(j2, i1);
      s += adj_ij * d[j];
    }
    x[i] = det == 1 ? s : -s;
  }
  return x;
}

FaceVerdict check_segment(const SupportedPoly& f_sigma, const CompactFace& face,
                          std::string* witness) {
  const LatticePoint& v0 = face.vertices[0];
  const LatticePoint& v1 = face.vertices[1];
  std::vector<Coord> dir(v0.size());
  Coord g = 0;
  for (std::size_t t = 0; t < v0.size(); ++t) {
    dir[t] = v1[t] - v0[t];
    g = gcd_c(g, dir[t]);
  }
  for (auto& c : dir) c /= g;
  std::size_t idx = 0;
  while (dir[idx] == 0) ++idx;

  UniPoly p(static_cast<std::size_t>(g) + 1, Rational(0));
  for (const auto& [q, c] : f_sigma.terms) {
    Coord t = (q[idx] - v0[idx]) / dir[idx];
    for (std::size_t w = 0; w < q.size(); ++w)
      if (q[w] != v0[w] + t * dir[w]) throw Error("face support left the segment");
    if (t < 0 || t > g) throw Error("face support outside the segment");
    p[static_cast<std::size_t>(t)] = c;
  }
  UniPoly common = gcd_monic(p, derivative(p));
  if (deg(common) >= 1) {
    if (witness) *witness = to_sparse(common, "t").to_string();
    return FaceVerdict::Degenerate;
  }
  return FaceVerdict::Nondegenerate;
}

FaceVerdict check_two_face(const SupportedPoly& f_sigma, const NewtonPolytope& np,
                           const CompactFace& face, std::string* witness) {
  const FacetData& own = np.facet(face.own_facet);
  KernelBasis kb = kernel_basis(own.normal);
  const LatticePoint& p0 = f_sigma.terms.begin()->first;

  // Coordinates of each support point in the kernel basis, shifted so the
  // minimal exponents are zero (strips the monomial prefactor).
  std::vector<std::pair<std::array<Coord, 3>, Rational>> flat;
  Coord min_a = 0, min_b = 0;
  bool first = true;
  for (const auto& [q, c] : f_sigma.terms) {
    std::array<Coord, 3> d{q[0] - p0[0], q[1] - p0[1], q[2] - p0[2]};
    std::array<Coord, 3> ab = solve_unimodular(kb, d);
    if (ab[2] != 0) throw Error("face support left its plane");
    if (first || ab[0] < min_a) min_a = ab[0];
    if (first || ab[1] < min_b) min_b = ab[1];
    first = false;
    flat.push_back({ab, c});
  }
  SparsePoly g;
  for (const auto& [ab, c] : flat)
    g += SparsePoly::monomial(c, {"u", "v"},
                              {static_cast<int>(ab[0] - min_a), static_cast<int>(ab[1] - min_b)});

  SparsePoly r1 = resultant(g, g.derivative("u"), "v");
  SparsePoly r2 = resultant(g, g.derivative("v"), "v");
  if (r1.is_zero() || r2.is_zero()) {
    if (witness) *witness = "resultant vanishes identically";
    return FaceVerdict::PossiblyDegenerate;
  }
  // Strip monomial factors in u: torus solutions have u != 0.
  auto strip_u = [](SparsePoly p) {
    int min_e = p.degree_in("u");
    for (const auto& [e, c] : p.terms()) {
      int eu = 0;
      for (std::size_t t = 0; t < p.vars().size(); ++t)
        if (p.vars()[t] == "u") eu = e[t];
      min_e = std::min(min_e, eu);
    }
    if (min_e <= 0) return p;
    auto q = p.divide_exact(SparsePoly::variable("u").pow(min_e));
    return *q;
  };
  UniPoly u1 = from_sparse(strip_u(r1), "u");
  UniPoly u2 = from_sparse(strip_u(r2), "u");
  UniPoly common = gcd_monic(u1, u2);
  if (deg(common) >= 1) {
    if (witness) *witness = to_sparse(common, "u").to_string();
    return FaceVerdict::PossiblyDegenerate;
  }
  return FaceVerdict::Nondegenerate;
}

}  // namespace

std::string to_string(FaceVerdict v) {
  switch (v) {
    case FaceVerdict::Nondegenerate: return "Nondegenerate";
    case FaceVerdict::PossiblyDegenerate: return "PossiblyDegenerate";
    case FaceVerdict::Degenerate: return "Degenerate";
  }
  return "?";
}

SupportedPoly face_polynomial(const SupportedPoly& f, const NewtonPolytope& np,
                              const CompactFace& face) {
  std::map<LatticePoint, Rational> kept;
  for (const auto& [p, c] : f.terms) {
    bool on_face = true;
    for (int id : face.facets)
      if (!np.point_on_facet(p, id)) {
        on_face = false;
        break;
      }
    if (on_face) kept.emplace(p, c);
  }
  return SupportedPoly(f.n, std::move(kept), f.var_names);
}

FaceVerdict check_face(const SupportedPoly& f_sigma, const NewtonPolytope& np,
                       const CompactFace& face, std::string* witness) {
  switch (face.dim) {
    case 0:
      return FaceVerdict::Nondegenerate;
    case 1:
      return check_segment(f_sigma, face, witness);
    case 2:
      return check_two_face(f_sigma, np, face, witness);
    default:
      throw Error("check_face: unsupported dimension");
  }
}

NondegReport is_nondegenerate(const SupportedPoly& f) {
  NewtonPolytope np = build_polytope(f);
  NondegReport report;
  auto severity = [](FaceVerdict v) {
    return v == FaceVerdict::Nondegenerate ? 0 : v == FaceVerdict::PossiblyDegenerate ? 1 : 2;
  };
  for (std::size_t t = 0; t < np.compact_faces.size(); ++t) {
    const CompactFace& face = np.compact_faces[t];
    SupportedPoly fs = face_polynomial(f, np, face);
    FaceReport fr;
    fr.face_index = static_cast<int>(t);
    fr.dim = face.dim;
    fr.verdict = check_face(fs, np, face, &fr.witness);
    if (severity(fr.verdict) > severity(report.overall)) report.overall = fr.verdict;
    report.faces.push_back(std::move(fr));
  }
  return report;
}

}  // namespace topzeta
